#include "hystwave/relay.hpp"

#include <stdexcept>

namespace hystwave {

bool check_confinement(double u, int z, threshold rho) {
    return (z - 1) * (u - rho.rho2) >= 0 && (z + 1) * (u - rho.rho1) >= 0;
}

std::pair<int, std::vector<relay_event>>
relay_evolve(const signal& sig, threshold rho, int z0, switch_policy policy) {
    sig.validate();
    if (!(rho.rho1 < rho.rho2)) throw std::invalid_argument("relay: rho1 < rho2 required");
    if (z0 != 1 && z0 != -1) throw std::invalid_argument("relay: z0 must be +-1");
    if (!check_confinement(sig.v0(), z0, rho))
        throw incompatible_initial_state("relay: (u(0), z0) outside the closed admissible region");

    const bool at_touch = (policy == switch_policy::always_at_touch);
    int z = z0;
    std::vector<relay_event> events;

    // the closed relay may switch on an exact touch, including at t = 0
    if (at_touch && z == -1 && sig.v0() == rho.rho2) {
        z = 1;
        events.push_back({sig.samples.front().t, +1});
    } else if (at_touch && z == 1 && sig.v0() == rho.rho1) {
        z = -1;
        events.push_back({sig.samples.front().t, -1});
    }

    for (size_t i = 1; i < sig.samples.size(); ++i) {
        const sample& lo = sig.samples[i - 1];
        const sample& hi = sig.samples[i];
        if (sig.mode == signal_mode::piecewise_constant) {
            // a jump is an instantaneous monotone sweep from lo.v to hi.v
            if (z == -1 && (hi.v > rho.rho2 || (at_touch && hi.v == rho.rho2))) {
                z = 1;
                events.push_back({hi.t, +1});
            } else if (z == 1 && (hi.v < rho.rho1 || (at_touch && hi.v == rho.rho1))) {
                z = -1;
                events.push_back({hi.t, -1});
            }
        } else {
            // within one linear segment at most one switch is possible
            if (z == -1 && hi.v > lo.v &&
                (hi.v > rho.rho2 || (at_touch && hi.v >= rho.rho2))) {
                double tc = lo.t + (rho.rho2 - lo.v) / (hi.v - lo.v) * (hi.t - lo.t);
                z = 1;
                events.push_back({tc, +1});
            } else if (z == 1 && hi.v < lo.v &&
                       (hi.v < rho.rho1 || (at_touch && hi.v <= rho.rho1))) {
                double tc = lo.t + (rho.rho1 - lo.v) / (hi.v - lo.v) * (hi.t - lo.t);
                z = -1;
                events.push_back({tc, -1});
            }
        }
    }
    return {z, events};
}

double psi_rho(const std::vector<relay_event>& events, threshold rho,
               double t0, double t1) {
    double acc = 0;
    for (const auto& e : events) {
        if (e.time < t0 || e.time >= t1) continue; // [t0, t1)
        acc += (e.direction > 0) ? 2.0 * rho.rho2 : -2.0 * rho.rho1;
    }
    return acc;
}

} // namespace hystwave
