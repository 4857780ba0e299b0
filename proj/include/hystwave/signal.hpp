#pragma once

#include <vector>

#include "hystwave/common.hpp"

namespace hystwave {

// =============================================================================
// Piecewise-monotone scalar inputs: continuous piecewise-linear, or
// right-continuous piecewise-constant (jump) signals on [0, T].
// =============================================================================

enum class signal_mode { linear, piecewise_constant };

struct sample {
    double t = 0;
    double v = 0;
};

struct signal {
    signal_mode mode = signal_mode::linear;
    std::vector<sample> samples; // strictly increasing t, first t = 0

    double t_end() const { return samples.back().t; }
    double v0() const { return samples.front().v; }

    // linear interpolation, or right-continuous step lookup
    double value(double t) const;

    void validate() const; // throws std::invalid_argument on a malformed sample list
};

// Endpoints of the monotone runs of the signal: first entry is (t0, v0), then
// one entry per direction reversal / final sample.  Zero-length moves dropped,
// consecutive same-direction moves merged.  For piecewise-constant signals the
// runs are the jumps (each jump is one instantaneous monotone sweep).
std::vector<sample> monotone_runs(const signal& sig);

} // namespace hystwave
