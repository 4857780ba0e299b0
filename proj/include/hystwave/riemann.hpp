#pragma once

#include <utility>
#include <vector>

#include "hystwave/preisach.hpp"

namespace hystwave {

// =============================================================================
// Exact Riemann solver for  u_t + w_t + u_x = 0  with Preisach w.
//
// Case 1 (u_l > u_r) sweeps the right memory curve upward; on each maximal
// smooth stretch the flux slowness is g(u) = 1 + 2(u - m) with m the abscissa
// of the staircase vertical governing the swept strip, or g(u) = 1 + 4u once
// the sweep runs on the virgin tail.  Case 2 mirrors this downward with
// g(u) = 1 + 2(M - u) and 1 - 4u.  The solution is a single rarefaction fan
// (with constant plateaus where g jumps) plus an optional stationary curve
// jump at x = 0.
// =============================================================================

struct riemann_data {
    double u_left = 0;
    double u_right = 0;
    memory_curve curve_left;
    memory_curve curve_right;
};

// one maximal u-stretch with a smooth branch flux, in sweep order from u_r
struct fan_branch {
    double u_near = 0;       // endpoint on the u_r side
    double u_far = 0;        // endpoint on the u_l side
    double gov = 0;          // governing minimum (case 1) / maximum (case 2)
    bool diagonal = false;   // virgin regime: g = 1 + 4*dir*u
    bool pop_plateau = false;// g jumps at u_far (a horizontal/vertical of xi_r
                             // is consumed there), so the fan carries a
                             // constant-u plateau between this branch and the next
};

struct riemann_breakpoints {
    double u_r = 0, u_l = 0;
    int dir = +1;                 // +1: case 1 (sweep up), -1: case 2 (sweep down)
    // case 1: maxima = consumed horizontal ordinates of xi_r in (u_r, u_l],
    //         ascending; minima = governing minima per branch, descending.
    // case 2, mirrored: minima = consumed vertical abscissas, descending;
    //         maxima = governing maxima per branch, ascending.
    std::vector<double> maxima;
    std::vector<double> minima;
    bool base_is_min = false;     // diagonal-adjacent segment of curve_r is
                                  // vertical, so the base breakpoint is m1 = u_r
    bool diagonal = false;        // the sweep reaches the virgin regime
    std::vector<fan_branch> branches; // sweep order, contiguous from u_r to u_l
};

struct fan_piece {
    double s_lo = 0, s_hi = 0;   // x/t interval; s_hi of the last piece is +inf
    bool rarefaction = false;
    double u_const = 0;          // constant pieces only
    double gov = 0;              // rarefaction: u = gov + dir*(t/x - 1)/2
    bool diagonal = false;       //             u = dir*(t/x - 1)/4
    int dir = +1;
};

struct riemann_fan {
    riemann_data data;
    riemann_breakpoints bp;
    std::vector<fan_piece> pieces; // contiguous, increasing in x/t, covering (0, inf)
    bool stationary_jump = false;  // curve discontinuity at x = 0
    memory_curve z_star;           // curve on the 0+ side = apply_monotone(curve_right, u_left)
};

// Branch decomposition of the sweep from u_r toward u_l over curve_right.
// Throws incompatible_data if the curve's anchor is not u_r.
riemann_breakpoints breakpoints(double u_r, const memory_curve& curve_right, double u_l);

// g(u) >= 1 on the branch containing u; at a shared branch boundary the
// u_r-side limit is returned.  Throws out_of_range outside the fan range.
double flux_slowness(double u, const riemann_breakpoints& bp);

riemann_fan solve_riemann(const riemann_data& data);

// Extended Rankine-Hugoniot speed  s = du / (du + dw).
// Throws no_jump if both jumps vanish, degenerate_front if du + dw = 0 != du.
double rh_speed(double u_minus, double w_minus, double u_plus, double w_plus);

// Self-similar evaluation at x/t = slowness > 0.
std::pair<double, memory_curve> evaluate_fan(const riemann_fan& fan, double slowness,
                                             const memory_curve& curve_right);

} // namespace hystwave
