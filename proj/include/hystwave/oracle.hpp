#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hystwave/preisach.hpp"
#include "hystwave/relay.hpp"

namespace hystwave {

// =============================================================================
// Brute-force Preisach backend: an N x N bank of individually evolved relays
// over cell centers of the triangle.  Only cells with center strictly above
// the diagonal rho1 < rho2 are active.  This is the independent oracle the
// staircase implementation is validated against.
// =============================================================================

struct relay_bank {
    triangle tri;
    int n_side = 0;                   // cells per side
    std::vector<std::int8_t> signs;   // n_side*n_side, row-major [iy*n_side+ix]; 0 = inactive

    double cell_size() const { return 2.0 * tri.a / n_side; }
    double center_x(int ix) const { return -tri.a + (ix + 0.5) * cell_size(); }
    double center_y(int iy) const { return -tri.a + (iy + 0.5) * cell_size(); }
    bool active(int ix, int iy) const { return center_x(ix) < center_y(iy); }
};

// Virgin bank (anti-diagonal rule, boundary cells resolved to +1), optionally
// evolved along a generating signal.
relay_bank bank_init(triangle tri, int n_side,
                     const std::optional<signal>& generating = std::nullopt);

// Elementwise relay_evolve over all active cells.  The parallel kernel and the
// serial reference produce identical banks (cells are independent).
relay_bank bank_evolve(const relay_bank& bank, const signal& sig);
relay_bank bank_evolve_serial(const relay_bank& bank, const signal& sig);

// Riemann sum of signs times cell area.  Summation order is fixed (serial
// row-order reduction of per-row partial sums) so results are byte-stable
// regardless of thread count.
double bank_w(const relay_bank& bank);

// Dissipation integral over [t0, t1): replays the evolution of `bank` along
// `sig` and accumulates 2*rho2 / -2*rho1 per cell switch, times cell area.
double bank_psi(const relay_bank& bank, const signal& sig, double t0, double t1);

} // namespace hystwave
