#pragma once

#include <cstdint>
#include <limits>

#include "pyro/lattice.hpp"

namespace pyro {

/// Clock channels. Growth clocks ring at rate 1, ignition clocks at the
/// model's lightning rate. Channels >= 2 address the per-site uniforms used
/// by experiment stages (initial fill, sprinkling).
enum class ClockKind : std::uint32_t { growth = 0, ignition = 1 };

inline constexpr std::uint32_t channel_fill = 2;
inline constexpr std::uint32_t channel_sprinkle = 3;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

/// Counter-based draw: a pure hash of (seed, site, channel, index). Any draw
/// can be recomputed at any time, in any order, on any worker.
constexpr std::uint64_t site_hash(std::uint64_t seed, Site v, std::uint32_t channel,
                                  std::uint64_t index) {
    std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ ((std::uint64_t(std::uint32_t(v.x)) << 32) | std::uint32_t(v.y)));
    h = mix64(h ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t(channel) + 1)));
    return mix64(h ^ index);
}

/// uniform in the open interval (0,1); 52 bits keep both endpoints exactly
/// representable, so the result never rounds onto 0 or 1
constexpr double u01(std::uint64_t h) {
    return (double(h >> 12) + 0.5) * 0x1p-52;
}

inline double site_uniform(std::uint64_t seed, Site v, std::uint32_t channel,
                           std::uint64_t index) {
    return u01(site_hash(seed, v, channel, index));
}

/// Replayable per-site Poisson clocks. For fixed (seed, site, kind) the
/// inter-event gaps are i.i.d. exponential; streams for distinct (site, kind)
/// are independent. event_time(site, kind, index) is a pure function of its
/// arguments, so the same seed always reproduces the same trajectory and the
/// growth-only, removal-at-t_c, and forest-fire processes can share one
/// stream (the couplings every comparison test relies on).
class ClockStream {
public:
    ClockStream(std::uint64_t seed, double ignition_rate)
        : seed_(seed), ignition_rate_(ignition_rate) {}

    std::uint64_t seed() const { return seed_; }
    double ignition_rate() const { return ignition_rate_; }
    double rate(ClockKind k) const {
        return k == ClockKind::growth ? 1.0 : ignition_rate_;
    }

    /// i.i.d. Exp(rate) gap between events index-1 and index; +inf at rate 0
    double gap(Site v, ClockKind k, std::uint64_t index) const;

    /// arrival time of the index-th event (index from 0); costs O(index)
    double event_time(Site v, ClockKind k, std::uint64_t index) const;

    /// earliest event time strictly after t; +inf if none exists
    double first_event_after(Site v, ClockKind k, double t) const;

    /// number of events with time <= t
    std::uint64_t events_through(Site v, ClockKind k, double t) const;

    /// true iff some event falls in (t0, t1]
    bool any_event_in(Site v, ClockKind k, double t0, double t1) const;

private:
    std::uint64_t seed_;
    double ignition_rate_;
};

}  // namespace pyro
