#include "pyro/clock_stream.hpp"

#include <cmath>

namespace pyro {

double ClockStream::gap(Site v, ClockKind k, std::uint64_t index) const {
    const double r = rate(k);
    if (r <= 0.0) return std::numeric_limits<double>::infinity();
    const double u = u01(site_hash(seed_, v, std::uint32_t(k), index));
    return -std::log(u) / r;
}

double ClockStream::event_time(Site v, ClockKind k, std::uint64_t index) const {
    double t = 0.0;
    for (std::uint64_t i = 0; i <= index; ++i) t += gap(v, k, i);
    return t;
}

double ClockStream::first_event_after(Site v, ClockKind k, double t) const {
    if (rate(k) <= 0.0) return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::uint64_t i = 0;; ++i) {
        s += gap(v, k, i);
        if (s > t) return s;
    }
}

std::uint64_t ClockStream::events_through(Site v, ClockKind k, double t) const {
    if (rate(k) <= 0.0) return 0;
    std::uint64_t n = 0;
    double s = 0.0;
    for (std::uint64_t i = 0;; ++i) {
        s += gap(v, k, i);
        if (s > t) return n;
        ++n;
    }
}

bool ClockStream::any_event_in(Site v, ClockKind k, double t0, double t1) const {
    if (t1 <= t0) return false;
    const double first = first_event_after(v, k, t0);
    return first <= t1;
}

}  // namespace pyro
