#pragma once

#include <cstdint>

#include "pyro/event_log.hpp"

namespace pyro {

/// The directed binary tree truncated to `generations` generations below the
/// root. Nodes are 1-based heap indices: root 1, children of v are 2v and
/// 2v+1. Node v's clocks are keyed by site (v-1, 0), so the 0-generation tree
/// is pathwise identical to the single-site box model under the same seed.
struct TreeConfig {
    std::int32_t generations = 0;
    double lambda = 0.0;
    double horizon = 0.0;
    std::uint64_t seed = 0;

    void validate() const;  // generations >= 0, lambda >= 0, horizon > 0
};

std::int64_t tree_node_count(std::int32_t generations);  // 2^{g+1} - 1

/// Trajectory from all-vacant: growth at rate 1 per node, ignition at rate
/// lambda per node; an ignition of an occupied node burns the maximal
/// occupied path from it toward the root (stopping at the first vacant
/// ancestor or after the root).
EventLog run_zeta(const TreeConfig& cfg);

/// First time the root burns, +inf when it never burns before the horizon.
/// Streams the trajectory without materializing a log.
double first_root_burn(const TreeConfig& cfg);

/// site percolation on the directed binary tree: 0 for p <= 1/2, (2p-1)/p above
double tree_percolation_probability(double p);

/// closed-form ceiling for P(root burns before t); vanishes at t = ln 2
double root_burn_upper_bound(double t);

/// matching closed-form floor: half the ceiling
double root_burn_lower_bound(double t);

/// One-generation recursion floor: given the level-n estimates
/// g = P(first root burn in (s, t]) and f = P(first root burn <= s), the
/// level-(n+1) window probability is at least
/// (1 - e^{-s}) * e^{-lambda s} * (g^2 + 2 g (1 - f)).
double recursion_rhs(double g_window, double f_at_window_start, double window_start,
                     double lambda);

}  // namespace pyro
