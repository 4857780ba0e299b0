#include "hystwave/signal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hystwave {

double signal::value(double t) const {
    if (samples.empty()) throw std::invalid_argument("signal: empty sample list");
    if (t <= samples.front().t) return samples.front().v;
    if (t >= samples.back().t) return samples.back().v;
    // first sample with time > t
    auto it = std::upper_bound(samples.begin(), samples.end(), t,
                               [](double tt, const sample& s) { return tt < s.t; });
    const sample& hi = *it;
    const sample& lo = *(it - 1);
    if (mode == signal_mode::piecewise_constant) return lo.v;
    double w = (t - lo.t) / (hi.t - lo.t);
    return lo.v + w * (hi.v - lo.v);
}

void signal::validate() const {
    if (samples.empty()) throw std::invalid_argument("signal: empty sample list");
    if (samples.front().t != 0) throw std::invalid_argument("signal: first sample time must be 0");
    for (size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].t > samples[i - 1].t))
            throw std::invalid_argument("signal: sample times must be strictly increasing");
}

std::vector<sample> monotone_runs(const signal& sig) {
    sig.validate();
    std::vector<sample> runs;
    runs.push_back(sig.samples.front());
    int dir = 0; // direction of the currently open run
    for (size_t i = 1; i < sig.samples.size(); ++i) {
        const sample& s = sig.samples[i];
        double dv = s.v - runs.back().v;
        if (dv == 0) {
            runs.back().t = s.t; // flat stretch only extends the run in time
            continue;
        }
        int d = dv > 0 ? 1 : -1;
        if (d == dir)
            runs.back() = s; // same direction: extend the run
        else {
            runs.push_back(s);
            dir = d;
        }
    }
    return runs;
}

} // namespace hystwave
