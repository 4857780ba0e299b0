#pragma once

#include <utility>
#include <vector>

#include "hystwave/signal.hpp"

namespace hystwave {

// =============================================================================
// Delayed relay h^rho: two-threshold rate-independent switch with output +-1.
// Switches up when the input exceeds rho2, down when it drops below rho1.
// =============================================================================

struct threshold {
    double rho1 = -1; // lower
    double rho2 = 1;  // upper, rho1 < rho2 strictly
};

// The closed relay admits a choice at exact threshold touches; the baseline
// operator never switches on a touch.  The flag exists for tests of the
// closed extension (the Preisach output is insensitive to it).
enum class switch_policy { never_at_touch, always_at_touch };

struct relay_event {
    double time = 0;
    int direction = 0; // +1 up-switch, -1 down-switch
};

// Evolve one relay along a signal.  Returns the final sign and the switch
// events in time order.  Throws incompatible_initial_state if (u(0), z0) is
// outside the closed admissible region.
std::pair<int, std::vector<relay_event>>
relay_evolve(const signal& sig, threshold rho, int z0,
             switch_policy policy = switch_policy::never_at_touch);

// Both confinement inequalities: (z-1)(u-rho2) >= 0 and (z+1)(u-rho1) >= 0.
bool check_confinement(double u, int z, threshold rho);

// Dissipation functional over [t0, t1): sum of 2*rho2 per up-switch minus
// 2*rho1 per down-switch.
double psi_rho(const std::vector<relay_event>& events, threshold rho,
               double t0, double t1);

} // namespace hystwave
