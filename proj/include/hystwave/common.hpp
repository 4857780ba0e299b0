#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace hystwave {

// =============================================================================
// Error taxonomy
// =============================================================================

struct incompatible_initial_state : std::runtime_error { using std::runtime_error::runtime_error; };
struct out_of_triangle            : std::runtime_error { using std::runtime_error::runtime_error; };
struct triangle_mismatch          : std::runtime_error { using std::runtime_error::runtime_error; };
struct incompatible_data          : std::runtime_error { using std::runtime_error::runtime_error; };
struct out_of_range               : std::runtime_error { using std::runtime_error::runtime_error; };
struct no_jump                    : std::runtime_error { using std::runtime_error::runtime_error; };
struct degenerate_front           : std::runtime_error { using std::runtime_error::runtime_error; };
struct internal_invariant_violation : std::runtime_error { using std::runtime_error::runtime_error; };
struct event_overflow             : std::runtime_error { using std::runtime_error::runtime_error; };
struct unbounded_support          : std::runtime_error { using std::runtime_error::runtime_error; };

// =============================================================================
// Dyadic grid A_n = { k * 2^-n }.  For the n and magnitudes used here the
// scaled values fit exactly in a double, so floor/ceil on the grid are exact.
// =============================================================================

inline double grid_step(int n) { return std::ldexp(1.0, -n); }

inline double grid_floor(double x, int n) {
    return std::ldexp(std::floor(std::ldexp(x, n)), -n);
}

inline double grid_ceil(double x, int n) {
    return std::ldexp(std::ceil(std::ldexp(x, n)), -n);
}

// nearest grid value, ties toward -inf
inline double grid_nearest(double x, int n) {
    double y = std::ldexp(x, n);
    double f = std::floor(y);
    double c = std::ceil(y);
    double k = (c - y < y - f) ? c : f;
    return std::ldexp(k, -n);
}

inline bool on_grid(double x, int n) {
    double y = std::ldexp(x, n);
    return y == std::floor(y);
}

// scaled tolerance for front position / event time comparisons
inline double pos_tol(double x) {
    return std::ldexp(std::fmax(1.0, std::fabs(x)), -50);
}

// shortest round-trip-exact decimal form, used by every text emitter
inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace hystwave
