#pragma once

#include <vector>

#include "hystwave/common.hpp"

namespace hystwave {

// =============================================================================
// Exact polygon moments and piecewise-linear envelopes on the Preisach plane.
// Everything here is plain computational geometry with no hysteresis semantics.
// =============================================================================

struct point {
    double x = 0, y = 0;
};

inline bool operator==(const point& p, const point& q) { return p.x == q.x && p.y == q.y; }

// Shoelace area and first moments ix = integral of x dA, iy = integral of y dA,
// sign-normalized so area >= 0 regardless of vertex orientation.
struct poly_moments {
    double area = 0;
    double ix = 0;
    double iy = 0;
};

poly_moments polygon_moments(const std::vector<point>& poly);

// A piecewise-linear, possibly discontinuous function given as contiguous
// segments [xa, xb] carrying f(x) = c + s*x.  Segments are ordered, xa < xb,
// and tile the full domain with no gaps.
struct pl_segment {
    double xa = 0, xb = 0;
    double c = 0, s = 0;
    double at(double x) const { return c + s * x; }
};

struct pl_function {
    std::vector<pl_segment> segs;

    double x_min() const { return segs.front().xa; }
    double x_max() const { return segs.back().xb; }

    // value with the upper convention at segment joins (max of touching limits)
    double eval_upper(double x) const;
};

// integral of f over its domain
double pl_integral(const pl_function& f);

// integral of |f - g| over the (identical) common domain
double pl_l1(const pl_function& f, const pl_function& g);

} // namespace hystwave
