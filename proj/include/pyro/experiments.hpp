#pragma once

#include <cstdint>
#include <vector>

#include "pyro/dynamics.hpp"
#include "pyro/stats.hpp"
#include "pyro/tree.hpp"

namespace pyro {

/// Three-stage crossing experiment on the box [0,4n] x [0,3n]:
///  1. fill i.i.d. at p_c,
///  2. vacate every site with an occupied nearest-neighbor path to the
///     box boundary,
///  3. make each vacant site occupied with probability delta (one shared
///     uniform per site, so outcomes are coupled monotonically across delta).
/// The measured event is an occupied crossing of the target [n,3n] x [n,2n]
/// in its short direction (top row to bottom row; `horizontal` flips it).
struct DeltaExperimentConfig {
    std::int32_t n = 8;
    double delta = 0.0;
    double p_c = default_p_c;
    std::int64_t replicas = 1000;
    std::uint64_t seed = 0;
    bool horizontal = false;

    Region box() const { return Region::rect(0, 4 * n, 0, 3 * n); }
    Region target() const { return Region::rect(n, 3 * n, n, 2 * n); }
    Site center() const { return Site{2 * n, (3 * n) / 2}; }
    void validate() const;
};

struct DeltaOutcome {
    bool crossing = false;
    bool center_occupied = false;            // after stage 3
    bool center_boundary_connected = false;  // in the stage-1 fill
};

DeltaOutcome delta_replica(const DeltaExperimentConfig& cfg, std::uint64_t replica_seed);

/// Monte Carlo estimate of the crossing probability at (n, delta).
Estimate estimate_p_n(const DeltaExperimentConfig& cfg, int workers = 1);

struct FireStatConfig {
    ModelKind model = ModelKind::eta;
    std::int32_t n = 8;               // box radius; tree generations for zeta
    std::int32_t m = 0;               // observation radius; generation depth for zeta
    double lambda = -1.0;
    std::int64_t size_threshold = -1;
    double t = 1.0;                   // horizon
    std::int64_t replicas = 1000;
    std::uint64_t seed = 0;
    double p_c = default_p_c;

    void validate() const;  // m <= n, model/parameter consistency
};

struct ReplicaFires {
    bool at_least_one = false;
    bool at_least_two = false;  // burn instants at two distinct times
    double tau = 0.0;           // first fire time in the observation box, +inf if none
};

/// fires of one trajectory inside the observation box before the horizon
ReplicaFires extract_fires(const EventLog& log, std::int32_t m, double horizon);
ReplicaFires fire_replica(const FireStatConfig& cfg, std::uint64_t replica_seed);

struct FireStats {
    Estimate at_least_one;
    Estimate at_least_two;
    std::vector<double> tau_samples;  // finite first-fire times, replica order
};

FireStats fire_stats(const FireStatConfig& cfg, int workers = 1);

/// One-sided comparison on coupled replicas:
///   lhs = P(origin burns before t),
///   rhs = E[1 - e^{-lambda t |C|}; C away from the box boundary]
///         + P(C reaches the box boundary),
/// where C is the origin's occupied cluster in the pure-growth state at t
/// (the boundary term is the finite-box stand-in for an infinite cluster,
/// keeping the inequality one-sided). Also verifies, trajectory by
/// trajectory, that whenever the origin burns some site of C had an ignition
/// ring before t.
struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_se = 0.0;
    double rhs_se = 0.0;
    double diff_se = 0.0;  // SE of the per-replica difference rhs - lhs
    std::int64_t replicas = 0;
    std::int64_t origin_burns = 0;
    std::int64_t necessary_violations = 0;
    bool holds = false;  // lhs <= rhs + 3 * diff_se
};

BoundCheck bound_check(const FireStatConfig& cfg, int workers = 1);  // model eta, m = 0

/// Crossing probability from the circuit at radius 3^i to the circuit at
/// radius 3*3^i in the removal-at-t_c process observed at t_c + eps, on the
/// box B(5*3^i).
Estimate xi_crossing_probe(std::int32_t annulus_i, double eps, std::int64_t replicas,
                           std::uint64_t seed, double p_c, int workers = 1);

/// True iff no ignition ring strikes B(guard_radius) before or at the first
/// fire time in B(m) (through the horizon when no fire occurs). Reads the
/// ignite records, which include rings on vacant sites.
bool probe_no_early_ignition(const EventLog& log, std::int32_t m, std::int32_t guard_radius);

/// True iff the state has a vacant star circuit around the origin in the ring
/// B(K_radius) \ B(k_radius) of the given scales. Throws
/// std::invalid_argument when the radii cannot form a ring.
bool probe_vacant_ring_circuit(const Grid& state, const Scales& s);

}  // namespace pyro
