#include "hystwave/oracle.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hystwave {

relay_bank bank_init(triangle tri, int n_side, const std::optional<signal>& generating) {
    if (n_side < 2) throw out_of_range("bank_init: N >= 2 required");
    relay_bank b;
    b.tri = tri;
    b.n_side = n_side;
    b.signs.assign(static_cast<size_t>(n_side) * n_side, 0);
    for (int iy = 0; iy < n_side; ++iy) {
        double cy = b.center_y(iy);
        for (int ix = 0; ix < n_side; ++ix) {
            if (!b.active(ix, iy)) continue;
            double cx = b.center_x(ix);
            // virgin state: -1 strictly above the anti-diagonal, +1 otherwise
            b.signs[static_cast<size_t>(iy) * n_side + ix] = (cy > -cx) ? -1 : 1;
        }
    }
    if (generating) return bank_evolve(b, *generating);
    return b;
}

namespace {

inline void evolve_row(const relay_bank& in, relay_bank& out, const signal& sig, int iy) {
    const int n = in.n_side;
    double cy = in.center_y(iy);
    for (int ix = 0; ix < n; ++ix) {
        size_t k = static_cast<size_t>(iy) * n + ix;
        if (in.signs[k] == 0) continue;
        threshold rho{in.center_x(ix), cy};
        out.signs[k] = static_cast<std::int8_t>(
            relay_evolve(sig, rho, in.signs[k]).first);
    }
}

} // namespace

relay_bank bank_evolve_serial(const relay_bank& bank, const signal& sig) {
    relay_bank out = bank;
    for (int iy = 0; iy < bank.n_side; ++iy) evolve_row(bank, out, sig, iy);
    return out;
}

relay_bank bank_evolve(const relay_bank& bank, const signal& sig) {
    relay_bank out = bank;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int iy = 0; iy < bank.n_side; ++iy) evolve_row(bank, out, sig, iy);
    return out;
}

double bank_w(const relay_bank& bank) {
    const int n = bank.n_side;
    const double cell_area = bank.cell_size() * bank.cell_size();
    std::vector<double> row_sums(n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int iy = 0; iy < n; ++iy) {
        double s = 0;
        for (int ix = 0; ix < n; ++ix) s += bank.signs[static_cast<size_t>(iy) * n + ix];
        row_sums[iy] = s;
    }
    double acc = 0; // fixed-order reduction keeps the result thread-count independent
    for (int iy = 0; iy < n; ++iy) acc += row_sums[iy];
    return acc * cell_area;
}

double bank_psi(const relay_bank& bank, const signal& sig, double t0, double t1) {
    const int n = bank.n_side;
    const double cell_area = bank.cell_size() * bank.cell_size();
    std::vector<double> row_sums(n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int iy = 0; iy < n; ++iy) {
        double s = 0;
        double cy = bank.center_y(iy);
        for (int ix = 0; ix < n; ++ix) {
            size_t k = static_cast<size_t>(iy) * n + ix;
            if (bank.signs[k] == 0) continue;
            threshold rho{bank.center_x(ix), cy};
            auto [zf, events] = relay_evolve(sig, rho, bank.signs[k]);
            (void)zf;
            s += psi_rho(events, rho, t0, t1);
        }
        row_sums[iy] = s;
    }
    double acc = 0;
    for (int iy = 0; iy < n; ++iy) acc += row_sums[iy];
    return acc * cell_area;
}

} // namespace hystwave
