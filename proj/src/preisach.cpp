#include "hystwave/preisach.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>

namespace hystwave {

namespace {

void drop_consecutive_dups(std::vector<point>& pts) {
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const point& p, const point& q) { return p == q; }),
              pts.end());
}

} // namespace

// ---- invariants -------------------------------------------------------------

void memory_curve::validate() const {
    const double a = tri.a;
    auto fail = [](const char* what) { throw internal_invariant_violation(what); };

    if (!(a > 0)) fail("memory curve: nonpositive triangle half-width");
    if (!(std::fabs(anchor) <= a)) fail("memory curve: anchor outside [-a, a]");

    if (corners.empty()) {
        if (!first_is_max) fail("memory curve: empty corner list must carry first_is_max");
        return;
    }

    if (first_is_max != (corners.front() > 0))
        fail("memory curve: first_is_max inconsistent with leading corner sign");
    if (!(std::fabs(corners.front()) <= a))
        fail("memory curve: leading corner outside [-a, a]");

    // each corner lies strictly between the two enclosing prior levels
    for (size_t i = 1; i < corners.size(); ++i) {
        double lo = corner_is_max(i) ? corners[i - 1]
                                     : (i >= 2 ? corners[i - 2] : -corners.front());
        double hi = corner_is_max(i) ? (i >= 2 ? corners[i - 2] : -corners.front())
                                     : corners[i - 1];
        if (!(lo < corners[i] && corners[i] < hi))
            fail("memory curve: corner nesting violated");
    }

    // anchor strictly inside the final bracket
    size_t k = corners.size();
    if (ends_with_max()) {
        double lo = k >= 2 ? corners[k - 2] : -corners.back();
        if (!(lo < anchor && anchor < corners.back()))
            fail("memory curve: anchor outside final bracket");
    } else {
        double hi = k >= 2 ? corners[k - 2] : -corners.back();
        if (!(corners.back() < anchor && anchor < hi))
            fail("memory curve: anchor outside final bracket");
    }
}

// ---- staircase geometry ------------------------------------------------------

std::vector<point> memory_curve::polyline() const {
    const double a = tri.a;
    double d = corners.empty() ? std::fabs(anchor) : std::fabs(corners.front());

    std::vector<point> pts;
    pts.push_back({-a, a});
    pts.push_back({-d, d});
    for (size_t i = 0; i < corners.size(); ++i) {
        double next = (i + 1 < corners.size()) ? corners[i + 1] : anchor;
        if (corner_is_max(i))
            pts.push_back({next, corners[i]}); // horizontal at the max level
        else
            pts.push_back({corners[i], next}); // vertical at the min level
    }
    pts.push_back({anchor, anchor});
    drop_consecutive_dups(pts);
    return pts;
}

pl_function memory_curve::envelope() const {
    const double a = tri.a;
    auto pts = polyline();

    pl_function env;
    // anti-diagonal virgin tail, if any of it is left
    if (pts[0].x < pts[1].x && pts[1].y == -pts[1].x)
        env.segs.push_back({pts[0].x, pts[1].x, 0.0, -1.0});
    // horizontal steps (verticals are jumps of the envelope and carry no width)
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i].y == pts[i + 1].y && pts[i].x < pts[i + 1].x)
            env.segs.push_back({pts[i].x, pts[i + 1].x, pts[i].y, 0.0});
    // diagonal ahead of the anchor
    if (anchor < a)
        env.segs.push_back({anchor, a, 0.0, 1.0});
    return env;
}

bool operator==(const memory_curve& c1, const memory_curve& c2) {
    return c1.tri.a == c2.tri.a && c1.first_is_max == c2.first_is_max &&
           c1.corners == c2.corners && c1.anchor == c2.anchor;
}

// ---- construction and evolution ----------------------------------------------

memory_curve virgin(triangle tri) {
    memory_curve c;
    c.tri = tri;
    return c;
}

namespace {

// Swept region of one monotone move, cut out of the old staircase.  The
// polygon runs from the crossing point along the old polyline to the old
// anchor, then closes through the new diagonal point (v, v).
flip_region sweep_region(const std::vector<point>& pts, double v, bool increase) {
    flip_region region;
    region.direction = increase ? +1 : -1;

    size_t j = 0;
    while (j < pts.size() && (increase ? pts[j].y > v : pts[j].x < v)) ++j;

    std::vector<point> poly;
    if (j == 0) {
        poly = pts; // saturation sweep: the whole staircase is crossed
    } else if (j == pts.size()) {
        return region; // nothing on the far side (can't happen for a real move)
    } else if (increase ? pts[j].y == v : pts[j].x == v) {
        poly.assign(pts.begin() + static_cast<std::ptrdiff_t>(j), pts.end());
    } else {
        const point& p = pts[j - 1];
        const point& q = pts[j];
        point cp;
        if (p.y == -p.x && q.y == -q.x)
            cp = increase ? point{-v, v} : point{v, -v}; // virgin tail
        else if (increase)
            cp = {p.x, v}; // vertical edge
        else
            cp = {v, p.y}; // horizontal edge
        poly.push_back(cp);
        poly.insert(poly.end(), pts.begin() + static_cast<std::ptrdiff_t>(j), pts.end());
    }
    poly.push_back({v, v});
    drop_consecutive_dups(poly);
    if (poly.size() >= 3) region.polygon = std::move(poly);
    return region;
}

} // namespace

std::pair<memory_curve, flip_region> apply_monotone(const memory_curve& c, double v) {
    if (std::fabs(v) > c.tri.a)
        throw out_of_triangle("apply_monotone: input value outside [-a, a]");
    if (v == c.anchor) return {c, flip_region{}};

    flip_region region = sweep_region(c.polyline(), v, v > c.anchor);
    memory_curve out = c;

    if (v > out.anchor) {
        bool placed = false;
        while (!out.corners.empty()) {
            if (out.ends_with_max()) {
                double top = out.corners.back();
                if (v < top) {
                    out.corners.push_back(out.anchor); // anchor freezes into a minimum
                    placed = true;
                    break;
                }
                out.corners.pop_back();
            } else {
                size_t k = out.corners.size();
                double above = k >= 2 ? out.corners[k - 2] : -out.corners.back();
                if (v < above) {
                    placed = true;
                    break;
                }
                out.corners.pop_back();
            }
        }
        if (!placed && out.corners.empty()) {
            if (out.anchor < 0 && v < -out.anchor) {
                out.corners.push_back(out.anchor);
                out.first_is_max = false;
            } else {
                out.first_is_max = true;
            }
        }
        out.anchor = v;
    } else {
        bool placed = false;
        while (!out.corners.empty()) {
            if (!out.ends_with_max()) {
                double bottom = out.corners.back();
                if (v > bottom) {
                    out.corners.push_back(out.anchor); // anchor freezes into a maximum
                    placed = true;
                    break;
                }
                out.corners.pop_back();
            } else {
                size_t k = out.corners.size();
                double below = k >= 2 ? out.corners[k - 2] : -out.corners.back();
                if (v > below) {
                    placed = true;
                    break;
                }
                out.corners.pop_back();
            }
        }
        if (!placed && out.corners.empty()) {
            if (out.anchor > 0 && v > -out.anchor) {
                out.corners.push_back(out.anchor);
                out.first_is_max = true;
            } else {
                out.first_is_max = true;
            }
        }
        out.anchor = v;
    }

    if (out.corners.empty()) out.first_is_max = true;
    return {std::move(out), std::move(region)};
}

std::pair<memory_curve, config_event_log> apply_signal(const memory_curve& c, const signal& sig) {
    auto runs = monotone_runs(sig);
    memory_curve cur = c;
    config_event_log log;

    auto step = [&](double t, double v) {
        auto [next, region] = apply_monotone(cur, v);
        cur = std::move(next);
        if (!region.polygon.empty()) log.moves.push_back({t, std::move(region)});
    };

    step(sig.samples.front().t, runs.front().v);
    for (size_t i = 1; i < runs.size(); ++i) step(runs[i].t, runs[i].v);
    return {std::move(cur), std::move(log)};
}

// ---- outputs -----------------------------------------------------------------

double output_w(const memory_curve& c) {
    // Area(+1) = integral of (xi(x) - x) dx and the x part integrates to zero
    return 2.0 * pl_integral(c.envelope()) - 2.0 * c.tri.a * c.tri.a;
}

int relay_state_at(const memory_curve& c, threshold rho) {
    const double a = c.tri.a;
    if (!(rho.rho1 < rho.rho2) || rho.rho1 < -a || rho.rho2 > a)
        throw out_of_triangle("relay_state_at: threshold pair outside the triangle");
    return rho.rho2 <= c.envelope().eval_upper(rho.rho1) ? +1 : -1;
}

double distance(const memory_curve& c1, const memory_curve& c2) {
    if (c1.tri.a != c2.tri.a)
        throw triangle_mismatch("distance: curves live on different triangles");
    return 2.0 * pl_l1(c1.envelope(), c2.envelope());
}

double psi_integral(const config_event_log& log, double t0, double t1) {
    double acc = 0;
    for (const auto& mv : log.moves) {
        if (mv.time < t0 || mv.time >= t1) continue;
        auto m = polygon_moments(mv.region.polygon);
        acc += mv.region.direction > 0 ? 2.0 * m.iy : -2.0 * m.ix;
    }
    return acc;
}

// ---- reduced memory sequences --------------------------------------------------

std::vector<double> rms(const signal& sig) {
    auto runs = monotone_runs(sig);
    std::vector<double> vals;
    vals.reserve(runs.size());
    for (const auto& r : runs) vals.push_back(r.v);

    std::vector<double> out;
    if (vals.size() == 1) {
        out.push_back(vals[0]);
        return out;
    }

    // dominant extremum by magnitude, later attainment breaking ties
    size_t i_max = 0, i_min = 0;
    for (size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] >= vals[i_max]) i_max = i;
        if (vals[i] <= vals[i_min]) i_min = i;
    }
    bool take_max;
    if (vals[i_max] > -vals[i_min]) take_max = true;
    else if (vals[i_max] < -vals[i_min]) take_max = false;
    else take_max = i_max > i_min;

    size_t cur = take_max ? i_max : i_min;
    bool scan_min = take_max;
    out.push_back(vals[cur]);
    while (cur + 1 < vals.size()) {
        size_t best = cur + 1;
        for (size_t i = cur + 1; i < vals.size(); ++i) {
            if (scan_min ? vals[i] <= vals[best] : vals[i] >= vals[best]) best = i;
        }
        out.push_back(vals[best]);
        cur = best;
        scan_min = !scan_min;
    }
    return out;
}

signal rms_to_lipschitz(const std::vector<double>& seq, double T, double u_start) {
    if (!(T > 0)) throw out_of_range("rms_to_lipschitz: horizon must be positive");

    std::vector<double> pts;
    pts.push_back(u_start);
    for (double v : seq)
        if (v != pts.back()) pts.push_back(v);

    signal sig;
    sig.mode = signal_mode::linear;
    double total = 0;
    for (size_t i = 1; i < pts.size(); ++i) total += std::fabs(pts[i] - pts[i - 1]);
    if (total == 0) {
        sig.samples = {{0, u_start}, {T, u_start}};
        return sig;
    }
    sig.samples.push_back({0, pts[0]});
    double run = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
        run += std::fabs(pts[i] - pts[i - 1]);
        double t = (i + 1 == pts.size()) ? T : T * run / total;
        sig.samples.push_back({t, pts[i]});
    }
    return sig;
}

memory_curve quantize(const memory_curve& c, int n) {
    if (n < 0) throw out_of_range("quantize: negative resolution");

    std::vector<double> seq;
    seq.reserve(c.corners.size() + 1);
    for (size_t i = 0; i < c.corners.size(); ++i)
        seq.push_back(c.corner_is_max(i) ? grid_floor(c.corners[i], n)
                                         : grid_ceil(c.corners[i], n));
    // the anchor is the running extremum of the unfinished last sweep
    bool anchor_is_low = c.corners.empty() ? c.anchor < 0 : c.ends_with_max();
    bool anchor_is_high = c.corners.empty() ? c.anchor > 0 : !c.ends_with_max();
    if (anchor_is_high) seq.push_back(grid_floor(c.anchor, n));
    else if (anchor_is_low) seq.push_back(grid_ceil(c.anchor, n));
    else seq.push_back(c.anchor); // virgin anchor 0 is already on every grid

    // replay from virgin: the cascade collapses any degeneracies introduced
    // by the rounding, so the result is canonical by construction
    memory_curve out = virgin(c.tri);
    for (double v : seq) out = apply_monotone(out, v).first;
    return out;
}

// ---- serialization -------------------------------------------------------------

std::string curve_to_string(const memory_curve& c) {
    std::string s = fmt_g17(c.tri.a);
    s += "; ";
    s += c.first_is_max ? '1' : '0';
    s += ';';
    for (double v : c.corners) {
        s += ' ';
        s += fmt_g17(v);
    }
    s += "; ";
    s += fmt_g17(c.anchor);
    return s;
}

memory_curve curve_from_string(const std::string& text) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    if (fields.size() != 4)
        throw incompatible_data("curve_from_string: expected 4 ';'-separated fields");

    auto parse_one = [](const std::string& f, const char* what) {
        std::istringstream in(f);
        double v;
        if (!(in >> v)) throw incompatible_data(std::string("curve_from_string: bad ") + what);
        std::string rest;
        if (in >> rest) throw incompatible_data(std::string("curve_from_string: trailing junk after ") + what);
        return v;
    };

    memory_curve c;
    c.tri.a = parse_one(fields[0], "half-width");
    double flag = parse_one(fields[1], "first-is-max flag");
    if (flag != 0 && flag != 1)
        throw incompatible_data("curve_from_string: first-is-max flag must be 0 or 1");
    c.first_is_max = flag == 1;
    std::istringstream in(fields[2]);
    double v;
    while (in >> v) c.corners.push_back(v);
    if (!in.eof())
        throw incompatible_data("curve_from_string: bad corner list");
    c.anchor = parse_one(fields[3], "anchor");

    try {
        c.validate();
    } catch (const internal_invariant_violation& e) {
        throw incompatible_data(std::string("curve_from_string: ") + e.what());
    }
    return c;
}

} // namespace hystwave
