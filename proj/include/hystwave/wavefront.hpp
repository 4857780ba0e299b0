#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hystwave/riemann.hpp"

namespace hystwave {

// =============================================================================
// Event-driven wave-front tracking on the dyadic grid A_n = { k 2^-n }.
// States are finitely many constant cells separated by fronts; rarefactions
// are split into 2^-n sub-shocks; interactions are resolved chronologically
// by local Riemann problems.
// =============================================================================

struct grid_params {
    int n = 3;
    double a = 1;
    double t_end = 1;
    long event_cap = 1000000; // guard against an interaction-loop bug
};

enum class front_kind { u_shock, z_stationary };

struct front {
    double position = 0;
    double speed = 0;            // u_shock: rh_speed in (0, 1]; z_stationary: 0
    int left_cell = 0;
    int right_cell = 0;
    front_kind kind = front_kind::u_shock;
    double psi = 0;              // dissipation density of the sweep carried
                                 // across this front (per unit of x crossed)
};

struct cell {
    double u = 0;
    memory_curve curve;
    double w = 0;                // cached output_w(curve)
};

struct piecewise_state {
    std::vector<cell> cells;     // left to right; first/last extend to -+inf
    std::vector<front> fronts;   // front k separates cells k and k+1
    double time = 0;
};

struct traj_event {
    double time = 0;
    double position = 0;
    std::string kind;            // uu_annihilate | uu_to_z | uz_transmit
    int fronts_in = 0;
    int fronts_out = 0;
};

// state snapshot at the start of an inter-event stretch, with the dissipation
// integral accumulated so far
struct traj_phase {
    double t0 = 0;
    piecewise_state state;
    double psi_cum = 0;
};

struct trajectory {
    grid_params params;
    std::vector<traj_phase> phases;  // phases.front().t0 = 0
    std::vector<traj_event> events;
    std::vector<std::pair<double, piecewise_state>> checkpoints;
};

// matched piecewise-constant Cauchy data (u0, z0)
struct initial_datum {
    std::vector<double> boundaries;   // strictly increasing; size = pieces - 1
    std::vector<double> u;
    std::vector<memory_curve> curves; // anchors must equal the u values
};

// Taut-string rounding onto A_n: each value moves to a point of
// [grid_floor(u_i), grid_ceil(u_i)], total variation never increases,
// already-gridded sequences pass through unchanged.
std::vector<double> round_tvd(const std::vector<double>& values, int n);

// Round u to A_n (round_tvd), quantize the curves and re-anchor them at the
// rounded u, then resolve every piece boundary into grid fronts.
piecewise_state discretize_initial(const initial_datum& data, int n);

// One front per 2^-n increment of the fan (plus the stationary curve jump,
// leftmost, when the fan has one), all at position 0, speeds strictly
// increasing left to right.  Cell indices are local: 0 = left outer state.
std::vector<front> split_fan(const riemann_fan& fan, int n);

// the constant states strictly between the fronts of split_fan, left to right
std::vector<cell> fan_interior_cells(const riemann_fan& fan, int n);

struct pending_event {
    double time = 0;
    double position = 0;
    int first_front = 0; // leftmost front of the colliding cluster
    int count = 0;       // fronts in the cluster (>= 2)
};

// earliest adjacent-pair crossing at or before t_end; ties resolved by lowest
// position, then largest cluster
std::optional<pending_event> next_event(const piecewise_state& state, double t_end);

// local Riemann resolution of one collision cluster
std::pair<piecewise_state, traj_event>
resolve_interaction(const piecewise_state& state, const pending_event& ev, int n);

trajectory evolve(const piecewise_state& state0, const grid_params& params,
                  const std::vector<double>& checkpoint_times);

// state at time t (right-continuous at event instants)
piecewise_state snapshot(const trajectory& traj, double t);

// integral over [0, t] of the Preisach dissipation rate of all moving fronts
double psi_up_to(const trajectory& traj, double t);

} // namespace hystwave
