#pragma once

// Randomized fixtures shared by the unit suites and the acceptance runner.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hystwave/analysis.hpp"
#include "hystwave/cli.hpp"
#include "hystwave/oracle.hpp"

namespace hwtest {

using namespace hystwave;

inline double unif(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * std::ldexp(static_cast<double>(g() >> 11), -53);
}

inline int unif_int(std::mt19937_64& g, int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

// piecewise-linear excursion from 0: one sample per unit of time
inline hystwave::signal random_signal(std::mt19937_64& g, double a, int max_runs,
                            double margin = 0.95) {
    hystwave::signal sig;
    sig.samples.push_back({0.0, 0.0});
    const int runs = unif_int(g, 1, max_runs);
    for (int i = 1; i <= runs; ++i)
        sig.samples.push_back({static_cast<double>(i), unif(g, -margin * a, margin * a)});
    return sig;
}

inline memory_curve random_curve(std::mt19937_64& g, triangle tri, int max_runs) {
    return apply_signal(virgin(tri), random_signal(g, tri.a, max_runs)).first;
}

// random curve re-anchored at u, resampled until it has at most max_corners
inline memory_curve random_curve_at(std::mt19937_64& g, triangle tri, double u,
                                    int max_corners) {
    for (;;) {
        memory_curve c = apply_monotone(random_curve(g, tri, max_corners + 2), u).first;
        if (c.corners.size() <= static_cast<size_t>(max_corners)) return c;
    }
}

// compatible Riemann data with a comfortably separated jump; half the time the
// left curve is the swept right curve, half an independent history
inline riemann_data random_riemann(std::mt19937_64& g, triangle tri, int max_corners) {
    riemann_data d;
    d.u_left = unif(g, -0.9 * tri.a, 0.9 * tri.a);
    do d.u_right = unif(g, -0.9 * tri.a, 0.9 * tri.a);
    while (std::fabs(d.u_left - d.u_right) < 1e-3 * tri.a);
    d.curve_right = random_curve_at(g, tri, d.u_right, max_corners);
    d.curve_left = (g() & 1) ? apply_monotone(d.curve_right, d.u_left).first
                             : random_curve_at(g, tri, d.u_left, max_corners);
    return d;
}

// matched piecewise-constant Cauchy data with virgin zero tails, so mass,
// energy, and L1 functionals are all finite
inline initial_datum random_datum(std::mt19937_64& g, triangle tri, int max_cells) {
    const int cells = unif_int(g, 3, max_cells);
    initial_datum d;
    double x = unif(g, -2.5, -1.5);
    for (int i = 0; i + 1 < cells; ++i) {
        d.boundaries.push_back(x);
        x += unif(g, 0.3, 1.2);
    }
    for (int i = 0; i < cells; ++i) {
        if (i == 0 || i == cells - 1) {
            d.u.push_back(0);
            d.curves.push_back(virgin(tri));
        } else {
            double u = unif(g, -0.9 * tri.a, 0.9 * tri.a);
            d.u.push_back(u);
            d.curves.push_back(random_curve_at(g, tri, u, 4));
        }
    }
    return d;
}

// Sampled total variation of the exact fan at time t, in u and in curve
// distance.  The curve part telescopes exactly under sampling (monotone
// additivity), so the resolution only matters for locating the u range.
inline std::pair<double, double> fan_tv_sampled(const riemann_fan& fan, double t,
                                                int samples = 200) {
    double s_max = 2;
    for (const fan_piece& p : fan.pieces)
        if (std::isfinite(p.s_hi)) s_max = std::max(s_max, p.s_hi + 1);

    double tv_u = 0;
    double tv_z = distance(fan.data.curve_left, fan.z_star); // jump at x = 0
    auto [u_prev, c_prev] = evaluate_fan(fan, 1e-9 / t, fan.data.curve_right);
    tv_u += std::fabs(u_prev - fan.data.u_left); // should be 0: head = u_l
    for (int j = 1; j <= samples; ++j) {
        double x = s_max * t * static_cast<double>(j) / samples;
        auto [u, c] = evaluate_fan(fan, x / t, fan.data.curve_right);
        tv_u += std::fabs(u - u_prev);
        tv_z += distance(c, c_prev);
        u_prev = u;
        c_prev = c;
    }
    tv_u += std::fabs(fan.data.u_right - u_prev); // tail = u_r
    tv_z += distance(fan.data.curve_right, c_prev);
    return {tv_u, tv_z};
}

// The time reversal (x, t) -> (-x, T - t) of a final state: cells mirrored,
// fronts mirrored keeping their speeds, and each u front re-carrying the
// dissipation of its reversed sweep (the right cell's curve driven to the left
// cell's u — the exact undo of the forward sweep).  The result is a one-phase
// trajectory object for feeding the energy checker an anti-entropic motion; it
// is only kinematically valid until its fronts first collide.
inline trajectory reversed_control(const piecewise_state& final_state, double T, int n) {
    piecewise_state rev;
    rev.time = 0;
    const size_t nc = final_state.cells.size();
    for (size_t i = 0; i < nc; ++i) rev.cells.push_back(final_state.cells[nc - 1 - i]);
    const size_t nf = final_state.fronts.size();
    for (size_t k = 0; k < nf; ++k) {
        const front& f = final_state.fronts[nf - 1 - k];
        front r;
        r.position = -f.position;
        r.speed = f.speed;
        r.kind = f.kind;
        r.left_cell = static_cast<int>(k);
        r.right_cell = static_cast<int>(k + 1);
        r.psi = 0;
        if (f.kind == front_kind::u_shock) {
            auto region = apply_monotone(rev.cells[k + 1].curve, rev.cells[k].u).second;
            auto m = polygon_moments(region.polygon);
            r.psi = region.direction > 0 ? 2.0 * m.iy : -2.0 * m.ix;
        }
        rev.fronts.push_back(r);
    }
    trajectory tr;
    tr.params = grid_params{n, final_state.cells.front().curve.tri.a, T, 1000000};
    tr.phases.push_back({0.0, std::move(rev), 0.0});
    return tr;
}

// largest horizon on which the reversed control is collision-free
inline double reversed_valid_until(const trajectory& rev, double T) {
    auto ev = next_event(rev.phases.front().state, T);
    return ev ? 0.9 * ev->time : T;
}

} // namespace hwtest
