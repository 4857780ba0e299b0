#include "hystwave/riemann.hpp"

#include <cmath>
#include <limits>

namespace hystwave {

namespace {

void check_pair(double u, const memory_curve& c, const char* side) {
    c.validate();
    if (c.anchor == u) return;
    // name the confinement inequality the mismatch violates
    if (u > c.anchor)
        throw incompatible_data(std::string("riemann data (") + side +
                                "): (z-1)(u-rho2) >= 0 fails for rho2 in (anchor, u)");
    throw incompatible_data(std::string("riemann data (") + side +
                            "): (z+1)(u-rho1) >= 0 fails for rho1 in (u, anchor)");
}

double branch_g(const fan_branch& br, int dir, double u) {
    return br.diagonal ? 1.0 + 4.0 * dir * u : 1.0 + 2.0 * dir * (u - br.gov);
}

} // namespace

riemann_breakpoints breakpoints(double u_r, const memory_curve& curve_right, double u_l) {
    check_pair(u_r, curve_right, "right");
    if (std::fabs(u_l) > curve_right.tri.a)
        throw incompatible_data("riemann data (left): u outside [-a, a]");

    riemann_breakpoints bp;
    bp.u_r = u_r;
    bp.u_l = u_l;
    bp.dir = u_l >= u_r ? +1 : -1;
    bp.base_is_min = curve_right.ends_with_max() ||
                     (curve_right.corners.empty() && curve_right.anchor < 0);
    if (u_l == u_r) return bp;

    memory_curve c = curve_right;
    double u_cur = u_r;
    const bool up = bp.dir > 0;

    while (up ? u_cur < u_l : u_cur > u_l) {
        fan_branch br;
        br.u_near = u_cur;

        if (c.corners.empty() && (up ? c.anchor >= 0 : c.anchor <= 0)) {
            br.u_far = u_l;
            br.diagonal = true;
            bp.diagonal = true;
        } else if (c.corners.empty()) {
            // the staircase is a single tail-attached segment; it is consumed
            // at -anchor, where g continues smoothly into the diagonal regime
            br.u_far = up ? std::min(-c.anchor, u_l) : std::max(-c.anchor, u_l);
            br.gov = c.anchor;
        } else if (up == c.ends_with_max()) {
            // first iteration only: the diagonal-adjacent segment is consumed first
            double lvl = c.corners.back();
            br.u_far = up ? std::min(lvl, u_l) : std::max(lvl, u_l);
            br.gov = c.anchor;
            bool kept = up ? lvl <= u_l : lvl >= u_l;
            if (kept) (up ? bp.maxima : bp.minima).push_back(lvl);
            br.pop_plateau = up ? lvl < u_l : lvl > u_l;
        } else {
            double m = c.corners.back();
            size_t k = c.corners.size();
            bool structural = k >= 2; // consumed at a genuine horizontal/vertical
            double lvl = structural ? c.corners[k - 2] : -m;
            br.u_far = up ? std::min(lvl, u_l) : std::max(lvl, u_l);
            br.gov = m;
            if (structural) {
                bool kept = up ? lvl <= u_l : lvl >= u_l;
                if (kept) (up ? bp.maxima : bp.minima).push_back(lvl);
                br.pop_plateau = up ? lvl < u_l : lvl > u_l;
            }
        }

        if (!br.diagonal) (up ? bp.minima : bp.maxima).push_back(br.gov);
        if (branch_g(br, bp.dir, br.u_near) < 1.0 || branch_g(br, bp.dir, br.u_far) < 1.0)
            throw internal_invariant_violation("breakpoints: branch slowness g < 1");
        bp.branches.push_back(br);
        u_cur = br.u_far;
        c = apply_monotone(c, u_cur).first;
    }

    // spec orientation: case-1 maxima ascend as pushed; minima descend as
    // pushed; mirrored lists in case 2 come out descending/ascending likewise
    return bp;
}

double flux_slowness(double u, const riemann_breakpoints& bp) {
    double lo = std::min(bp.u_r, bp.u_l), hi = std::max(bp.u_r, bp.u_l);
    if (u < lo || u > hi || bp.branches.empty())
        throw out_of_range("flux_slowness: u outside the fan range");
    for (const auto& br : bp.branches) {
        double blo = std::min(br.u_near, br.u_far), bhi = std::max(br.u_near, br.u_far);
        if (u >= blo && u <= bhi) return branch_g(br, bp.dir, u);
    }
    throw internal_invariant_violation("flux_slowness: branches do not tile the fan range");
}

double rh_speed(double u_minus, double w_minus, double u_plus, double w_plus) {
    double du = u_plus - u_minus;
    double dw = w_plus - w_minus;
    if (du == 0 && dw == 0) throw no_jump("rh_speed: both jumps vanish");
    if (du + dw == 0) throw degenerate_front("rh_speed: du + dw = 0 with du != 0");
    return du / (du + dw);
}

riemann_fan solve_riemann(const riemann_data& data) {
    check_pair(data.u_left, data.curve_left, "left");
    check_pair(data.u_right, data.curve_right, "right");
    if (data.curve_left.tri.a != data.curve_right.tri.a)
        throw incompatible_data("riemann data: triangle half-widths differ");

    riemann_fan fan;
    fan.data = data;
    fan.z_star = apply_monotone(data.curve_right, data.u_left).first;
    fan.stationary_jump = !(fan.z_star == data.curve_left);

    const double inf = std::numeric_limits<double>::infinity();
    if (data.u_left == data.u_right) {
        fan.bp = breakpoints(data.u_right, data.curve_right, data.u_left);
        fan_piece piece;
        piece.s_lo = 0;
        piece.s_hi = inf;
        piece.u_const = data.u_right;
        fan.pieces.push_back(piece);
        return fan;
    }

    fan.bp = breakpoints(data.u_right, data.curve_right, data.u_left);
    const auto& brs = fan.bp.branches;
    const int dir = fan.bp.dir;

    double s_edge = 1.0 / branch_g(brs.back(), dir, data.u_left);
    fan_piece head;
    head.s_lo = 0;
    head.s_hi = s_edge;
    head.u_const = data.u_left;
    fan.pieces.push_back(head);

    for (size_t i = brs.size(); i-- > 0;) {
        const auto& br = brs[i];
        fan_piece rar;
        rar.s_lo = 1.0 / branch_g(br, dir, br.u_far);
        rar.s_hi = 1.0 / branch_g(br, dir, br.u_near);
        rar.rarefaction = true;
        rar.gov = br.gov;
        rar.diagonal = br.diagonal;
        rar.dir = dir;
        if (rar.s_lo != fan.pieces.back().s_hi)
            throw internal_invariant_violation("solve_riemann: fan pieces not contiguous");
        if (rar.s_lo < rar.s_hi) fan.pieces.push_back(rar);

        // brs[i-1] ending in a structural pop means g jumps at u = br.u_near
        if (i > 0 && brs[i - 1].pop_plateau) {
            fan_piece plat;
            plat.s_lo = rar.s_hi;
            plat.s_hi = 1.0 / branch_g(brs[i - 1], dir, br.u_near);
            plat.u_const = br.u_near;
            if (plat.s_lo >= plat.s_hi)
                throw internal_invariant_violation("solve_riemann: empty plateau at a flux jump");
            fan.pieces.push_back(plat);
        }
    }

    fan_piece tail;
    tail.s_lo = fan.pieces.back().s_hi;
    tail.s_hi = inf;
    tail.u_const = data.u_right;
    fan.pieces.push_back(tail);
    return fan;
}

std::pair<double, memory_curve> evaluate_fan(const riemann_fan& fan, double slowness,
                                             const memory_curve& curve_right) {
    if (!(slowness > 0)) throw out_of_range("evaluate_fan: slowness must be positive");
    for (const auto& piece : fan.pieces) {
        if (slowness < piece.s_lo || slowness > piece.s_hi) continue;
        double u;
        if (piece.rarefaction) {
            double t_over_x = 1.0 / slowness;
            u = piece.diagonal ? piece.dir * (t_over_x - 1.0) / 4.0
                               : piece.gov + piece.dir * (t_over_x - 1.0) / 2.0;
        } else {
            u = piece.u_const;
        }
        return {u, apply_monotone(curve_right, u).first};
    }
    throw internal_invariant_violation("evaluate_fan: pieces do not cover (0, inf)");
}

} // namespace hystwave
