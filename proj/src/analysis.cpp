#include "hystwave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hystwave {

double total_variation_u(const piecewise_state& st) {
    double acc = 0;
    for (size_t i = 0; i + 1 < st.cells.size(); ++i)
        acc += std::fabs(st.cells[i + 1].u - st.cells[i].u);
    return acc;
}

double total_variation_z(const piecewise_state& st) {
    double acc = 0;
    for (size_t i = 0; i + 1 < st.cells.size(); ++i)
        acc += distance(st.cells[i].curve, st.cells[i + 1].curve);
    return acc;
}

double mass(const piecewise_state& st) {
    if (st.cells.empty()) return 0;
    const double b_l = st.cells.front().u + st.cells.front().w;
    const double b_r = st.cells.back().u + st.cells.back().w;
    if (b_l != b_r)
        throw unbounded_support{"mass: tail values of u + w differ"};
    double acc = 0;
    for (size_t k = 1; k + 1 < st.cells.size(); ++k) {
        double width = st.fronts[k].position - st.fronts[k - 1].position;
        acc += width * (st.cells[k].u + st.cells[k].w - b_l);
    }
    return acc;
}

namespace {

// 1/2 * int_A^B u^2 dx for a piecewise-constant state
double kinetic_energy(const piecewise_state& st, double A, double B) {
    if (st.fronts.empty()) return 0.5 * st.cells[0].u * st.cells[0].u * (B - A);
    double acc = 0;
    double x = A;
    for (size_t k = 0; k < st.fronts.size(); ++k) {
        double xr = st.fronts[k].position;
        acc += 0.5 * st.cells[k].u * st.cells[k].u * (xr - x);
        x = xr;
    }
    acc += 0.5 * st.cells.back().u * st.cells.back().u * (B - x);
    return acc;
}

} // namespace

energy_report energy_inequality(const trajectory& traj, double t) {
    piecewise_state s0 = snapshot(traj, 0);
    piecewise_state s1 = snapshot(traj, t);
    energy_report rep;
    rep.psi_total = psi_up_to(traj, t);
    if (!s0.fronts.empty() || !s1.fronts.empty()) {
        double A = std::numeric_limits<double>::infinity();
        double B = -std::numeric_limits<double>::infinity();
        for (const front& f : s0.fronts) { A = std::min(A, f.position); B = std::max(B, f.position); }
        for (const front& f : s1.fronts) { A = std::min(A, f.position); B = std::max(B, f.position); }
        A -= 1;
        B += 1;
        rep.kinetic_delta = kinetic_energy(s1, A, B) - kinetic_energy(s0, A, B);
    }
    const double b_l = s0.cells.front().u;
    const double b_r = s0.cells.back().u;
    rep.flux_correction = 0.5 * t * (b_r * b_r - b_l * b_l);
    rep.lhs = rep.kinetic_delta + rep.psi_total + rep.flux_correction;
    return rep;
}

double front_entropy_residual(const cell& left, const cell& right, double speed,
                              const entropy_probe& probe) {
    const double dq = std::fabs(right.u - probe.k) - std::fabs(left.u - probe.k);
    const double dD = distance(right.curve, probe.k_hat) -
                      distance(left.curve, probe.k_hat);
    return speed * (dq + dD) - dq;
}

namespace {

void check_probe(const entropy_probe& probe) {
    probe.k_hat.validate();
    if (probe.k_hat.anchor != probe.k)
        throw incompatible_data{"entropy probe: k_hat anchor must equal k"};
}

} // namespace

double entropy_residual(const trajectory& traj, const entropy_probe& probe,
                        double t0, double t1) {
    check_probe(probe);
    double best = std::numeric_limits<double>::infinity();
    for (size_t p = 0; p < traj.phases.size(); ++p) {
        double lo = traj.phases[p].t0;
        double hi = (p + 1 < traj.phases.size()) ? traj.phases[p + 1].t0
                                                 : traj.params.t_end;
        if (hi < t0 || lo > t1) continue;
        const piecewise_state& st = traj.phases[p].state;
        for (size_t k = 0; k < st.fronts.size(); ++k)
            best = std::min(best, front_entropy_residual(st.cells[k], st.cells[k + 1],
                                                         st.fronts[k].speed, probe));
    }
    return std::isinf(best) ? 0.0 : best;
}

double entropy_residual_aggregate(const trajectory& traj, const entropy_probe& probe) {
    check_probe(probe);
    double acc = 0;
    for (size_t p = 0; p < traj.phases.size(); ++p) {
        double lo = traj.phases[p].t0;
        double hi = (p + 1 < traj.phases.size()) ? traj.phases[p + 1].t0
                                                 : traj.params.t_end;
        double dt = hi - lo;
        if (!(dt > 0)) continue;
        const piecewise_state& st = traj.phases[p].state;
        for (size_t k = 0; k < st.fronts.size(); ++k) {
            double r = front_entropy_residual(st.cells[k], st.cells[k + 1],
                                              st.fronts[k].speed, probe);
            if (r < 0) acc += dt * r;
        }
    }
    return acc;
}

namespace {

// measure of { x in [x0, x1] : env(x) >= level }
double measure_ge(const pl_function& env, double x0, double x1, double level) {
    double acc = 0;
    for (const pl_segment& seg : env.segs) {
        double a = std::max(seg.xa, x0);
        double b = std::min(seg.xb, x1);
        if (!(a < b)) continue;
        double fa = seg.c + seg.s * a;
        double fb = seg.c + seg.s * b;
        if (fa >= level && fb >= level) {
            acc += b - a;
        } else if (fa >= level || fb >= level) {
            double xc = std::clamp((level - seg.c) / seg.s, a, b);
            acc += (fa >= level) ? xc - a : b - xc;
        }
    }
    return acc;
}

} // namespace

double fan_entropy_residual(const riemann_fan& fan, const entropy_probe& probe,
                            double slowness) {
    check_probe(probe);
    if (!(slowness > 0))
        throw out_of_range{"fan residual: slowness must be positive"};
    const fan_piece* piece = nullptr;
    for (const fan_piece& p : fan.pieces)
        if (p.s_lo <= slowness && slowness <= p.s_hi) { piece = &p; break; }
    if (piece == nullptr)
        throw out_of_range{"fan residual: slowness not covered by the fan"};
    if (!piece->rarefaction) return 0.0; // constants and the x = 0 jump

    const double invtx = 1.0 / slowness; // t/x
    const double u = piece->diagonal ? piece->dir * (invtx - 1.0) / 4.0
                                     : piece->gov + piece->dir * (invtx - 1.0) / 2.0;
    const double g = flux_slowness(u, fan.bp);
    const double ux = piece->diagonal ? g * g / 4.0 : g * g / 2.0; // |u_x| at t = 1
    const double gov_eff = piece->diagonal ? -u : piece->gov;
    const double L = std::fabs(u - gov_eff);

    // measure of the moving strip on which the probe curve is still positive
    double len_pos;
    const pl_function env = probe.k_hat.envelope();
    if (piece->dir > 0) {
        len_pos = measure_ge(env, gov_eff, u, u);
    } else {
        double xi_hat = env.eval_upper(u);
        len_pos = std::clamp(xi_hat - u, 0.0, L);
    }
    const double dprime = 2.0 * L - 4.0 * len_pos;
    const double sgn = (u > probe.k) ? 1.0 : (u < probe.k ? -1.0 : 0.0);
    return piece->dir * (ux / g) * (sgn * (g - 1.0) - dprime);
}

double l1_distance(const piecewise_state& s1, const piecewise_state& s2) {
    const cell& l1c = s1.cells.front();
    const cell& l2c = s2.cells.front();
    const cell& r1c = s1.cells.back();
    const cell& r2c = s2.cells.back();
    if (l1c.u != l2c.u || !(l1c.curve == l2c.curve) ||
        r1c.u != r2c.u || !(r1c.curve == r2c.curve))
        return std::numeric_limits<double>::infinity();

    std::vector<double> xs;
    for (const front& f : s1.fronts) xs.push_back(f.position);
    for (const front& f : s2.fronts) xs.push_back(f.position);
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());

    auto cell_at = [](const piecewise_state& st, double x) -> const cell& {
        size_t idx = 0;
        while (idx < st.fronts.size() && st.fronts[idx].position < x) ++idx;
        return st.cells[idx];
    };
    double acc = 0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        double width = xs[i + 1] - xs[i];
        if (!(width > 0)) continue;
        double mid = 0.5 * (xs[i] + xs[i + 1]);
        const cell& a = cell_at(s1, mid);
        const cell& b = cell_at(s2, mid);
        if (a.u == b.u && a.curve == b.curve) continue;
        acc += width * (std::fabs(a.u - b.u) + distance(a.curve, b.curve));
    }
    return acc;
}

std::vector<entropy_probe> probe_family(const piecewise_state& st, double k) {
    if (st.cells.empty())
        throw incompatible_data{"probe family needs a nonempty state"};
    const triangle tri = st.cells.front().curve.tri;
    if (std::fabs(k) > tri.a)
        throw out_of_range{"probe level outside the triangle"};

    std::vector<entropy_probe> out;
    auto add = [&](const memory_curve& c) {
        for (const entropy_probe& p : out)
            if (p.k_hat == c) return;
        out.push_back({k, c});
    };
    add(apply_monotone(apply_monotone(virgin(tri), -tri.a).first, k).first);
    add(apply_monotone(apply_monotone(virgin(tri), tri.a).first, k).first);
    add(apply_monotone(virgin(tri), k).first);
    for (const cell& c : st.cells) add(apply_monotone(c.curve, k).first);
    return out;
}

} // namespace hystwave
