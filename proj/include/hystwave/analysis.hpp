#pragma once

#include <vector>

#include "hystwave/wavefront.hpp"

namespace hystwave {

// =============================================================================
// Verification functionals: variation, mass, energy balance, Kruzkov-type
// entropy residuals against (k, k_hat) probes, and the L1 distance that the
// contraction estimates are stated in.
// =============================================================================

struct entropy_probe {
    double k = 0;
    memory_curve k_hat; // reference curve; its anchor must equal k
};

struct energy_report {
    double kinetic_delta = 0;    // 1/2 * int (u(t)^2 - u(0)^2) dx
    double psi_total = 0;        // dissipation integral over [0, t]
    double flux_correction = 0;  // t/2 * (b_r^2 - b_l^2) for the u tails
    double lhs = 0;              // kinetic_delta + psi_total + flux_correction
};

double total_variation_u(const piecewise_state& st);
double total_variation_z(const piecewise_state& st);

// integral of (u + w - b) with b the common tail value of u + w; throws
// unbounded_support when the tails disagree
double mass(const piecewise_state& st);

energy_report energy_inequality(const trajectory& traj, double t);

// per-front residual s*(dq + dD) - dq with q = |u - k|, D = d(curve, k_hat);
// nonnegative for entropic fronts
double front_entropy_residual(const cell& left, const cell& right, double speed,
                              const entropy_probe& probe);

// minimum per-front residual over all phases meeting [t0, t1] (0 if no fronts)
double entropy_residual(const trajectory& traj, const entropy_probe& probe,
                        double t0, double t1);

// time integral over [0, t_end] of the negative residual parts
double entropy_residual_aggregate(const trajectory& traj, const entropy_probe& probe);

// residual density of the exact (unsplit) fan at a given slowness x/t,
// evaluated at t = 1: g comes from flux_slowness, the memory term from the
// k_hat envelope geometry, so the two routes cross-check each other
double fan_entropy_residual(const riemann_fan& fan, const entropy_probe& probe,
                            double slowness);

// int |u1 - u2| + d(curve1, curve2) dx over the refined partition; +inf when
// the tail states differ
double l1_distance(const piecewise_state& s1, const piecewise_state& s2);

// saturated-up, saturated-down, virgin-shifted, and the state's own curves
// swept to k
std::vector<entropy_probe> probe_family(const piecewise_state& st, double k);

} // namespace hystwave
