#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include "pyro/clock_stream.hpp"
#include "pyro/event_log.hpp"
#include "pyro/grid.hpp"

namespace pyro {

/// standard numerical estimate for the site-percolation threshold of Z^2
inline constexpr double default_p_c = 0.592746;

/// the time at which pure growth reaches density p_c: 1 - exp(-t_c) = p_c
inline double critical_time(double p_c) { return -std::log1p(-p_c); }

struct TrajectoryConfig {
    Region region = Region::box(1);
    double lambda = -1.0;             // >= 0 selects the ignition-rate model
    std::int64_t size_threshold = -1; // >= 2 selects the threshold model
    double horizon = 0.0;
    std::uint64_t seed = 0;
    double p_c = default_p_c;

    static TrajectoryConfig eta(Region region, double lambda, double horizon,
                                std::uint64_t seed);
    static TrajectoryConfig eta_threshold(Region region, std::int64_t L, double horizon,
                                          std::uint64_t seed);
    /// exactly one of lambda / size_threshold set, horizon > 0; throws
    /// std::invalid_argument otherwise
    void validate() const;
};

/// called after each processed event instant with the post-instant state
using StateObserver = std::function<void(double time, const Grid& state)>;

/// Exact event-driven trajectory of the forest-fire process on the region,
/// from the all-vacant state: growth rings occupy (ignored when already
/// occupied), an ignition ring on an occupied site burns its whole occupied
/// cluster at that instant, an ignition ring on a vacant site is a recorded
/// no-op. Tie-break order for simultaneous events is (time, site index, kind).
EventLog run_eta(const TrajectoryConfig& cfg);
EventLog run_eta(const TrajectoryConfig& cfg, const StateObserver& observe);

/// Threshold variant: growth as above; immediately after a growth event, if
/// the grown site's occupied cluster has size >= size_threshold, the whole
/// cluster burns at that instant. No ignition clocks.
EventLog run_eta_L(const TrajectoryConfig& cfg);
EventLog run_eta_L(const TrajectoryConfig& cfg, const StateObserver& observe);

/// Pure growth: v is occupied iff its growth clock rings in [0, t]; sites are
/// independent Bernoulli(1 - e^{-t}).
Grid run_sigma(std::uint64_t seed, const Region& region, double t);

struct XiRun {
    Grid state;
    std::int32_t max_annulus_i = -1;  // largest even i with annulus(i) inside the region
    std::int64_t removed_sites = 0;   // sites cleared at t_c
};

/// Growth-only process with one destruction instant: identical to run_sigma
/// for t < t_c; at t_c every occupied cluster of each contained annulus(i)
/// (clusters computed within the annulus) that surrounds the origin is made
/// vacant; growth proceeds afterwards. The region must be a box or rectangle
/// containing at least annulus(2).
XiRun run_xi(std::uint64_t seed, const Region& region, double t, double t_c);

struct Scales {
    double K = 0.0;
    double k = 0.0;
    std::int32_t K_radius = 0;
    std::int32_t k_radius = 0;
};

/// K = lambda^{-1/3}, k = lambda^{-1/4} with floored box radii; lambda in (0,1)
Scales scales(double lambda);
/// K = L^{1/3}, k = L^{1/4} for the threshold model, L >= 2
Scales scales_threshold(std::int64_t L);

}  // namespace pyro
