#include "hystwave/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hystwave {

// ---------------------------------------------------------------------------
// grid rounding
// ---------------------------------------------------------------------------

// Taut string through the per-sample windows [grid_floor(u), grid_ceil(u)]:
// keep a running intersection, and when the next window misses it, commit the
// endpoint facing the new window to the whole stretch and restart.  Committed
// values are window members, so |r_i - u_i| <= 2^-n.  The last stretch takes
// the value nearest the previous commit, so every jump of r is the exact gap
// between consecutive window intersections, which u itself must cross:
// Var(r) <= Var(u).  On-grid samples have singleton windows and pass through.
std::vector<double> round_tvd(const std::vector<double>& values, int n) {
    std::vector<double> r(values.size());
    if (values.empty()) return r;
    size_t seg_begin = 0;
    double lo = grid_floor(values[0], n);
    double hi = grid_ceil(values[0], n);
    bool committed = false;
    double prev = 0;
    auto flush = [&](size_t end, double v) {
        for (size_t i = seg_begin; i < end; ++i) r[i] = v;
        seg_begin = end;
        committed = true;
        prev = v;
    };
    for (size_t j = 1; j < values.size(); ++j) {
        double wlo = grid_floor(values[j], n);
        double whi = grid_ceil(values[j], n);
        if (whi < lo) {
            flush(j, lo);
            lo = wlo;
            hi = whi;
        } else if (wlo > hi) {
            flush(j, hi);
            lo = wlo;
            hi = whi;
        } else {
            lo = std::max(lo, wlo);
            hi = std::min(hi, whi);
        }
    }
    double last = committed ? prev : grid_nearest(values.back(), n);
    flush(values.size(), std::clamp(last, lo, hi));
    return r;
}

// ---------------------------------------------------------------------------
// fan splitting
// ---------------------------------------------------------------------------

namespace {

struct split_result {
    std::vector<front> fronts;   // at position 0, left to right
    std::vector<cell> interior;  // states strictly between the fronts
};

split_result split_fan_impl(const riemann_fan& fan, int n) {
    const riemann_data& d = fan.data;
    if (!on_grid(d.u_left, n) || !on_grid(d.u_right, n))
        throw internal_invariant_violation{"fan endpoints are off the grid"};
    const double h = grid_step(n);
    const double dir = (d.u_left >= d.u_right) ? 1.0 : -1.0;
    const long m = std::lround((d.u_left - d.u_right) * dir / h);

    // sweep from the right state up to u_left in grid steps
    std::vector<cell> states(static_cast<size_t>(m) + 1);
    std::vector<double> psis(static_cast<size_t>(m) + 1, 0.0);
    states[0] = {d.u_right, d.curve_right, output_w(d.curve_right)};
    for (long k = 1; k <= m; ++k) {
        double uk = d.u_right + dir * static_cast<double>(k) * h;
        auto [c, region] = apply_monotone(states[k - 1].curve, uk);
        states[k] = {uk, c, output_w(c)};
        if (region.polygon.size() >= 3) {
            poly_moments mom = polygon_moments(region.polygon);
            psis[k] = (region.direction > 0) ? 2.0 * mom.iy : -2.0 * mom.ix;
        }
    }
    if (!(states[static_cast<size_t>(m)].curve == fan.z_star))
        throw internal_invariant_violation{"split sweep disagrees with z*"};

    split_result out;
    if (fan.stationary_jump)
        out.fronts.push_back({0.0, 0.0, 0, 1, front_kind::z_stationary, 0.0});
    for (long k = m; k >= 1; --k) {
        const cell& cl = states[static_cast<size_t>(k)];
        const cell& cr = states[static_cast<size_t>(k) - 1];
        double s = rh_speed(cl.u, cl.w, cr.u, cr.w);
        if (!out.fronts.empty() && out.fronts.back().kind == front_kind::u_shock &&
            !(out.fronts.back().speed < s))
            throw internal_invariant_violation{"split speeds are not increasing"};
        out.fronts.push_back({0.0, s, 0, 0, front_kind::u_shock,
                              psis[static_cast<size_t>(k)]});
    }
    // interior = the states strictly between the fronts, left to right:
    // states[m..1] when a z front leads (it splits left outer from z*),
    // states[m-1..1] otherwise (left outer already equals z*)
    for (long k = fan.stationary_jump ? m : m - 1; k >= 1; --k)
        out.interior.push_back(states[static_cast<size_t>(k)]);
    for (size_t j = 0; j < out.fronts.size(); ++j) {
        out.fronts[j].left_cell = static_cast<int>(j);
        out.fronts[j].right_cell = static_cast<int>(j) + 1;
    }
    return out;
}

} // namespace

std::vector<front> split_fan(const riemann_fan& fan, int n) {
    return split_fan_impl(fan, n).fronts;
}

std::vector<cell> fan_interior_cells(const riemann_fan& fan, int n) {
    return split_fan_impl(fan, n).interior;
}

// ---------------------------------------------------------------------------
// discretization of Cauchy data
// ---------------------------------------------------------------------------

piecewise_state discretize_initial(const initial_datum& data, int n) {
    const size_t m = data.u.size();
    if (m == 0 || data.curves.size() != m || data.boundaries.size() + 1 != m)
        throw incompatible_data{"initial datum arrays are inconsistently sized"};
    for (size_t i = 0; i + 1 < data.boundaries.size(); ++i)
        if (!(data.boundaries[i] < data.boundaries[i + 1]))
            throw incompatible_data{"piece boundaries must be strictly increasing"};
    const double a = data.curves[0].tri.a;
    for (size_t i = 0; i < m; ++i) {
        if (data.curves[i].tri.a != a)
            throw triangle_mismatch{"initial curves live on different triangles"};
        data.curves[i].validate();
        if (data.curves[i].anchor != data.u[i])
            throw incompatible_data{"curve anchor must equal the cell value"};
    }

    // drop boundaries between identical pieces
    std::vector<double> xs, us;
    std::vector<memory_curve> cs;
    us.push_back(data.u[0]);
    cs.push_back(data.curves[0]);
    for (size_t i = 1; i < m; ++i) {
        if (data.u[i] == us.back() && data.curves[i] == cs.back()) continue;
        xs.push_back(data.boundaries[i - 1]);
        us.push_back(data.u[i]);
        cs.push_back(data.curves[i]);
    }

    // quantize: u by the taut string, curves by corner rounding, then
    // re-anchor each curve at its rounded cell value
    std::vector<double> r = round_tvd(us, n);
    const double a_grid = grid_floor(a, n);
    for (double& v : r) v = std::clamp(v, -a_grid, a_grid);
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] = apply_monotone(quantize(cs[i], n), r[i]).first;

    // merge pieces the rounding has made identical
    std::vector<double> xs2, us2;
    std::vector<memory_curve> cs2;
    us2.push_back(r[0]);
    cs2.push_back(cs[0]);
    for (size_t i = 1; i < r.size(); ++i) {
        if (r[i] == us2.back() && cs[i] == cs2.back()) continue;
        xs2.push_back(xs[i - 1]);
        us2.push_back(r[i]);
        cs2.push_back(cs[i]);
    }

    piecewise_state st;
    st.time = 0;
    st.cells.push_back({us2[0], cs2[0], output_w(cs2[0])});
    for (size_t b = 0; b < xs2.size(); ++b) {
        riemann_fan fan = solve_riemann(
            {us2[b], us2[b + 1], cs2[b], cs2[b + 1]});
        split_result sr = split_fan_impl(fan, n);
        if (sr.fronts.empty()) continue; // states coincide after all
        size_t base = st.cells.size() - 1;
        for (size_t j = 0; j < sr.fronts.size(); ++j) {
            front f = sr.fronts[j];
            f.position = xs2[b];
            f.left_cell = static_cast<int>(base + j);
            f.right_cell = static_cast<int>(base + j + 1);
            st.fronts.push_back(f);
        }
        for (const cell& c : sr.interior) st.cells.push_back(c);
        st.cells.push_back({us2[b + 1], cs2[b + 1], output_w(cs2[b + 1])});
    }
    return st;
}

// ---------------------------------------------------------------------------
// event queue
// ---------------------------------------------------------------------------

std::optional<pending_event> next_event(const piecewise_state& state, double t_end) {
    const auto& fr = state.fronts;
    double best_t = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k + 1 < fr.size(); ++k) {
        double ds = fr[k].speed - fr[k + 1].speed;
        if (!(ds > 0)) continue;
        double dt = (fr[k + 1].position - fr[k].position) / ds;
        if (dt < 0) dt = 0;
        best_t = std::min(best_t, state.time + dt);
    }
    if (!(best_t <= t_end)) return std::nullopt;

    // among pairs crossing at best_t (to tolerance), take the lowest position
    const double t_tol = pos_tol(best_t);
    double best_x = std::numeric_limits<double>::infinity();
    size_t seed = 0;
    for (size_t k = 0; k + 1 < fr.size(); ++k) {
        double ds = fr[k].speed - fr[k + 1].speed;
        if (!(ds > 0)) continue;
        double dt = (fr[k + 1].position - fr[k].position) / ds;
        if (dt < 0) dt = 0;
        if (state.time + dt > best_t + t_tol) continue;
        double x = fr[k].position + fr[k].speed * dt;
        if (x < best_x) {
            best_x = x;
            seed = k;
        }
    }

    // cluster: every front sitting at best_x (to tolerance) at time best_t
    const double dt_all = best_t - state.time;
    const double x_tol = pos_tol(best_x);
    auto at_x = [&](size_t j) {
        return std::fabs(fr[j].position + fr[j].speed * dt_all - best_x) <= x_tol;
    };
    size_t first = seed, last = seed + 1;
    while (first > 0 && at_x(first - 1)) --first;
    while (last + 1 < fr.size() && at_x(last + 1)) ++last;

    pending_event ev;
    ev.time = best_t;
    ev.position = best_x;
    ev.first_front = static_cast<int>(first);
    ev.count = static_cast<int>(last - first + 1);
    return ev;
}

// ---------------------------------------------------------------------------
// interaction resolution
// ---------------------------------------------------------------------------

std::pair<piecewise_state, traj_event>
resolve_interaction(const piecewise_state& state, const pending_event& ev, int n) {
    const size_t first = static_cast<size_t>(ev.first_front);
    const size_t count = static_cast<size_t>(ev.count);
    if (count < 2 || first + count > state.fronts.size())
        throw internal_invariant_violation{"interaction cluster out of bounds"};

    piecewise_state st;
    st.time = ev.time;
    const double dt = ev.time - state.time;

    const cell& left = state.cells[first];
    const cell& right = state.cells[first + count];
    riemann_fan fan = solve_riemann({left.u, right.u, left.curve, right.curve});
    split_result sr = split_fan_impl(fan, n);

    int z_in = 0;
    for (size_t j = first; j < first + count; ++j)
        if (state.fronts[j].kind == front_kind::z_stationary) ++z_in;
    int u_out = 0, z_out = 0;
    for (const front& f : sr.fronts)
        (f.kind == front_kind::u_shock ? u_out : z_out)++;

    // splice: cells [0, first] + fan interior + cells [first+count, end);
    // fronts before the cluster advected, then the fan at ev.position, then
    // the fronts after the cluster advected
    for (size_t i = 0; i <= first; ++i) st.cells.push_back(state.cells[i]);
    for (const cell& c : sr.interior) st.cells.push_back(c);
    for (size_t i = first + count; i < state.cells.size(); ++i)
        st.cells.push_back(state.cells[i]);

    for (size_t j = 0; j < first; ++j) {
        front f = state.fronts[j];
        f.position += f.speed * dt;
        st.fronts.push_back(f);
    }
    for (front f : sr.fronts) {
        f.position = ev.position;
        st.fronts.push_back(f);
    }
    for (size_t j = first + count; j < state.fronts.size(); ++j) {
        front f = state.fronts[j];
        f.position += f.speed * dt;
        st.fronts.push_back(f);
    }
    for (size_t j = 0; j < st.fronts.size(); ++j) {
        st.fronts[j].left_cell = static_cast<int>(j);
        st.fronts[j].right_cell = static_cast<int>(j) + 1;
    }

    traj_event rec;
    rec.time = ev.time;
    rec.position = ev.position;
    rec.fronts_in = static_cast<int>(count);
    rec.fronts_out = static_cast<int>(sr.fronts.size());
    if (sr.fronts.empty())
        rec.kind = "uu_annihilate";
    else if (z_in == 0 && u_out == 0 && z_out == 1)
        rec.kind = "uu_to_z";
    else
        rec.kind = "uz_transmit";
    return {std::move(st), rec};
}

// ---------------------------------------------------------------------------
// evolution
// ---------------------------------------------------------------------------

trajectory evolve(const piecewise_state& state0, const grid_params& params,
                  const std::vector<double>& checkpoint_times) {
    trajectory traj;
    traj.params = params;
    piecewise_state cur = state0;
    cur.time = 0;
    double psi_cum = 0;
    traj.phases.push_back({0.0, cur, 0.0});
    long n_events = 0;
    while (auto ev = next_event(cur, params.t_end)) {
        if (++n_events > params.event_cap)
            throw event_overflow{"interaction count exceeded the event cap"};
        double dt = ev->time - cur.time;
        for (const front& f : cur.fronts) psi_cum += f.psi * f.speed * dt;
        auto [next, rec] = resolve_interaction(cur, *ev, params.n);
        traj.events.push_back(rec);
        cur = std::move(next);
        traj.phases.push_back({cur.time, cur, psi_cum});
    }
    for (double t : checkpoint_times)
        traj.checkpoints.emplace_back(t, snapshot(traj, t));
    return traj;
}

piecewise_state snapshot(const trajectory& traj, double t) {
    if (!(t >= 0) || !(t <= traj.params.t_end))
        throw out_of_range{"snapshot time outside [0, t_end]"};
    const traj_phase* ph = &traj.phases.front();
    for (const traj_phase& p : traj.phases) {
        if (p.t0 <= t) ph = &p;
        else break;
    }
    piecewise_state st = ph->state;
    const double dt = t - ph->t0;
    for (front& f : st.fronts) f.position += f.speed * dt;
    st.time = t;
    return st;
}

double psi_up_to(const trajectory& traj, double t) {
    if (!(t >= 0) || !(t <= traj.params.t_end))
        throw out_of_range{"time outside [0, t_end]"};
    const traj_phase* ph = &traj.phases.front();
    for (const traj_phase& p : traj.phases) {
        if (p.t0 <= t) ph = &p;
        else break;
    }
    double acc = ph->psi_cum;
    const double dt = t - ph->t0;
    for (const front& f : ph->state.fronts) acc += f.psi * f.speed * dt;
    return acc;
}

} // namespace hystwave
