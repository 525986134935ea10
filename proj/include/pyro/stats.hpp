#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pyro {

/// Binomial proportion with a 95% Wilson score interval (robust near 0 and 1).
struct Estimate {
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t successes = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;

    static Estimate wilson(std::int64_t successes, std::int64_t trials, std::uint64_t seed);
    /// sqrt(p(1-p)/n) with the small-count guard p(1-p) >= 1/n
    double standard_error() const;
};

/// Mergeable per-parameter-point tally: (successes, trials) plus the finite
/// first-fire-time samples. Merging is associative and commutative; merging
/// different parameter points is a usage error.
struct Tally {
    std::string point_key;
    std::int64_t successes = 0;
    std::int64_t trials = 0;
    std::vector<double> tau_samples;
    std::uint64_t seed = 0;
};

Tally merge(const Tally& a, const Tally& b);
Estimate to_estimate(const Tally& t);

double mean(const std::vector<double>& xs);
double sample_sd(const std::vector<double>& xs);
/// q-th quantile by linear interpolation of the sorted sample
double quantile(std::vector<double> xs, double q);

/// Two-sample Kolmogorov-Smirnov distance. +inf entries are censored
/// observations (no event); they only contribute to the tail plateau.
double ks_distance(std::vector<double> a, std::vector<double> b);

}  // namespace pyro
