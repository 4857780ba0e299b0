#include "hystwave/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hystwave {

poly_moments polygon_moments(const std::vector<point>& poly) {
    poly_moments m;
    const size_t n = poly.size();
    if (n < 3) return m;
    double a2 = 0, sx = 0, sy = 0; // twice area, 6x moments
    for (size_t i = 0; i < n; ++i) {
        const point& p = poly[i];
        const point& q = poly[(i + 1) % n];
        double cr = p.x * q.y - q.x * p.y;
        a2 += cr;
        sx += (p.x + q.x) * cr;
        sy += (p.y + q.y) * cr;
    }
    double sgn = (a2 < 0) ? -1.0 : 1.0;
    m.area = sgn * a2 / 2.0;
    m.ix = sgn * sx / 6.0;
    m.iy = sgn * sy / 6.0;
    return m;
}

double pl_function::eval_upper(double x) const {
    double best = -HUGE_VAL;
    for (const auto& s : segs) {
        if (x < s.xa || x > s.xb) continue;
        best = std::max(best, s.at(x));
    }
    return best;
}

double pl_integral(const pl_function& f) {
    double acc = 0;
    for (const auto& s : f.segs)
        acc += s.c * (s.xb - s.xa) + s.s * 0.5 * (s.xb * s.xb - s.xa * s.xa);
    return acc;
}

namespace {

// value of segment-covered function at x assuming x lies inside seg list;
// walks the cursor forward (segments visited in order).
struct seg_cursor {
    const std::vector<pl_segment>* segs;
    size_t i = 0;
    const pl_segment& seg_at(double xa, double xb) {
        // segment containing the open interval (xa, xb)
        double mid = 0.5 * (xa + xb);
        while (i + 1 < segs->size() && (*segs)[i].xb <= mid) ++i;
        (void)xa;
        return (*segs)[i];
    }
};

} // namespace

double pl_l1(const pl_function& f, const pl_function& g) {
    // merge breakpoints, integrate |linear difference| with zero-crossing splits
    std::vector<double> xs;
    xs.reserve(f.segs.size() + g.segs.size() + 2);
    for (const auto& s : f.segs) { xs.push_back(s.xa); xs.push_back(s.xb); }
    for (const auto& s : g.segs) { xs.push_back(s.xa); xs.push_back(s.xb); }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    seg_cursor cf{&f.segs}, cg{&g.segs};
    double acc = 0;
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
        double xa = xs[k], xb = xs[k + 1];
        if (!(xb > xa)) continue;
        const pl_segment& sf = cf.seg_at(xa, xb);
        const pl_segment& sg = cg.seg_at(xa, xb);
        double dc = sf.c - sg.c, ds = sf.s - sg.s;
        double va = dc + ds * xa, vb = dc + ds * xb;
        if (va * vb >= 0) {
            acc += 0.5 * std::fabs(va + vb) * (xb - xa);
        } else {
            // linear difference crosses zero inside (xa, xb)
            double xc = -dc / ds;
            acc += 0.5 * std::fabs(va) * (xc - xa) + 0.5 * std::fabs(vb) * (xb - xc);
        }
    }
    return acc;
}

} // namespace hystwave
