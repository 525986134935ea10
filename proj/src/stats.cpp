#include "pyro/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pyro {

namespace {
constexpr double z95 = 1.959963984540054;
}

Estimate Estimate::wilson(std::int64_t successes, std::int64_t trials, std::uint64_t seed) {
    if (trials <= 0) throw std::invalid_argument("Estimate: trials must be >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("Estimate: successes outside [0, trials]");
    Estimate e;
    e.successes = successes;
    e.trials = trials;
    e.seed = seed;
    const double n = double(trials);
    const double p = double(successes) / n;
    e.point = p;
    const double z2 = z95 * z95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // the score interval always contains p; keep that true under rounding
    e.lo = std::min(std::max(0.0, center - half), p);
    e.hi = std::max(std::min(1.0, center + half), p);
    return e;
}

double Estimate::standard_error() const {
    const double n = double(trials);
    const double p = point;
    return std::sqrt(std::max(p * (1.0 - p), 1.0 / n) / n);
}

Tally merge(const Tally& a, const Tally& b) {
    if (a.trials == 0) return b;
    if (b.trials == 0) return a;
    if (a.point_key != b.point_key)
        throw std::invalid_argument("merge: tallies from different parameter points");
    Tally out;
    out.point_key = a.point_key;
    out.successes = a.successes + b.successes;
    out.trials = a.trials + b.trials;
    out.tau_samples = a.tau_samples;
    out.tau_samples.insert(out.tau_samples.end(), b.tau_samples.begin(), b.tau_samples.end());
    out.seed = a.seed ? a.seed : b.seed;
    return out;
}

Estimate to_estimate(const Tally& t) {
    return Estimate::wilson(t.successes, t.trials, t.seed);
}

double mean(const std::vector<double>& xs) {
    if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double x : xs) s += x;
    return s / double(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / double(xs.size() - 1));
}

double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile: q outside [0,1]");
    std::sort(xs.begin(), xs.end());
    const double pos = q * double(xs.size() - 1);
    const std::size_t lo = std::size_t(pos);
    if (lo + 1 >= xs.size()) return xs.back();
    const double frac = pos - double(lo);
    return xs[lo] * (1.0 - frac) + xs[lo + 1] * frac;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = double(a.size());
    const double nb = double(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() || j < b.size()) {
        double v;
        if (i < a.size() && (j >= b.size() || a[i] <= b[j]))
            v = a[i];
        else
            v = b[j];
        if (std::isinf(v)) break;  // censored tail: CDFs plateau from here on
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::abs(double(i) / na - double(j) / nb));
    }
    return d;
}

}  // namespace pyro
