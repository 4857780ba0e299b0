#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hystwave/geometry.hpp"
#include "hystwave/relay.hpp"
#include "hystwave/signal.hpp"

namespace hystwave {

struct triangle {
    double a = 1; // half-width; vertices (-a,-a), (a,a), (-a,a); area 2a^2
};

// =============================================================================
// Preisach operator with Lebesgue measure on the triangle, represented exactly
// by staircase memory curves (the reduced-memory-sequence corner list).
//
// Geometry conventions: the plane is (rho1, rho2) with the configuration's
// separating staircase running from (-a, a) to the diagonal anchor (u, u).
// The +1 region is below/left of the staircase.  The virgin state is the
// anti-diagonal rho2 = -rho1.
// =============================================================================

struct flip_region {
    std::vector<point> polygon; // simple polygon inside the triangle; empty = no-op
    int direction = 0;          // +1: relays flipped -1 -> +1; -1: the reverse
};

struct config_event_log {
    struct move {
        double time = 0;
        flip_region region;
    };
    std::vector<move> moves;
};

struct memory_curve {
    triangle tri;
    bool first_is_max = true;    // redundant with corners[0] > 0; kept for the
                                 // serialization contract, true when corners empty
    std::vector<double> corners; // alternating extrema, outermost first
    double anchor = 0;           // current input value; curve meets the diagonal here

    bool corner_is_max(size_t i) const { return first_is_max == (i % 2 == 0); }
    bool ends_with_max() const { return !corners.empty() && corner_is_max(corners.size() - 1); }

    // throws internal_invariant_violation when the staircase is not canonical
    void validate() const;

    // staircase vertices from (-a, a) to (anchor, anchor)
    std::vector<point> polyline() const;

    // upper envelope xi(x) on [-a, a]: anti-diagonal tail, horizontal step
    // heights, then the diagonal for x >= anchor
    pl_function envelope() const;
};

bool operator==(const memory_curve& c1, const memory_curve& c2);
inline bool operator!=(const memory_curve& c1, const memory_curve& c2) { return !(c1 == c2); }

// ---- operations ------------------------------------------------------------

memory_curve virgin(triangle tri);

// One monotone input move to v; returns the new curve and the swept region.
// Throws out_of_triangle when |v| > a.
std::pair<memory_curve, flip_region> apply_monotone(const memory_curve& c, double v);

// Fold apply_monotone over the monotone runs of sig; the log records each
// nonempty flip region at its run-end time (first move, if any, at t = 0).
std::pair<memory_curve, config_event_log> apply_signal(const memory_curve& c, const signal& sig);

// w = integral of the sign field = 2*Area(+1) - 2a^2
double output_w(const memory_curve& c);

// sign of the relay at rho; boundary points resolve to +1.
int relay_state_at(const memory_curve& c, threshold rho);

// L1 distance of sign fields = 2 x area of the symmetric difference
double distance(const memory_curve& c1, const memory_curve& c2);

// reduced memory sequence of a signal (alternating dominant extrema,
// last entry is the final value)
std::vector<double> rms(const signal& sig);

// Lipschitz reparameterization through the RMS points on [0, T]
signal rms_to_lipschitz(const std::vector<double>& seq, double T, double u_start);

// lattice quantization: maxima floored to A_n, minima ceiled, replayed from
// virgin so degeneracies collapse canonically
memory_curve quantize(const memory_curve& c, int n);

// sum over +1 regions of 2*iy minus sum over -1 regions of 2*ix, for moves
// with time in [t0, t1)
double psi_integral(const config_event_log& log, double t0, double t1);

// plain-text record "a; first-is-max; corners...; anchor"
std::string curve_to_string(const memory_curve& c);
memory_curve curve_from_string(const std::string& text);

} // namespace hystwave
