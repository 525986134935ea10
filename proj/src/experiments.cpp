#include "pyro/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pyro/pool.hpp"
#include "pyro/seeds.hpp"

namespace pyro {

void DeltaExperimentConfig::validate() const {
    if (n < 1) throw std::invalid_argument("delta experiment: n must be >= 1");
    if (delta < 0.0 || delta > 1.0)
        throw std::invalid_argument("delta experiment: delta outside [0,1]");
    if (!(p_c >= 0.0 && p_c <= 1.0))
        throw std::invalid_argument("delta experiment: p_c outside [0,1]");
    if (replicas < 1) throw std::invalid_argument("delta experiment: replicas must be >= 1");
}

namespace {

// stage 2: vacate every site with an occupied nearest-neighbor path to the
// box boundary; returns the initial boundary-connected set (visit order)
std::vector<std::int32_t> destroy_boundary_cluster(Grid& g, const Boundary& bd) {
    const Region& B = g.region();
    std::vector<std::int32_t> reach;
    std::vector<std::uint8_t> seen(std::size_t(B.bounding_count()), 0);
    for (Site v : bd.sites) {
        const std::int32_t idx = B.index_of(v);
        if (g.raw(idx) && !seen[std::size_t(idx)]) {
            seen[std::size_t(idx)] = 1;
            reach.push_back(idx);
        }
    }
    for (std::size_t qi = 0; qi < reach.size(); ++qi) {
        const Site v = B.site_of(reach[qi]);
        for (int d = 0; d < 4; ++d) {
            const Site w{v.x + neighbor_steps[std::size_t(d)].x,
                         v.y + neighbor_steps[std::size_t(d)].y};
            if (!B.contains(w)) continue;
            const std::int32_t idx = B.index_of(w);
            if (!g.raw(idx) || seen[std::size_t(idx)]) continue;
            seen[std::size_t(idx)] = 1;
            reach.push_back(idx);
        }
    }
    for (std::int32_t idx : reach) g.set_raw(idx, 0);
    return reach;
}

// independent full re-check of the destruction postcondition
void verify_destruction(const Grid& g, const Boundary& bd) {
    Grid copy = g;
    std::vector<std::int32_t> still = destroy_boundary_cluster(copy, bd);
    if (!still.empty())
        throw std::logic_error("delta_replica: occupied site still reaches the boundary");
}

}  // namespace

DeltaOutcome delta_replica(const DeltaExperimentConfig& cfg, std::uint64_t replica_seed) {
    cfg.validate();
    const Region B = cfg.box();
    const Boundary bd = boundary(B);
    Grid g(B);

    // stage 1: i.i.d. fill at p_c
    const std::int64_t cells = B.bounding_count();
    for (std::int32_t idx = 0; idx < cells; ++idx)
        if (site_uniform(replica_seed, B.site_of(idx), channel_fill, 0) < cfg.p_c)
            g.set_raw(idx, 1);

    // stage 2: destroy the boundary-connected occupied set
    const std::int32_t center_idx = B.index_of(cfg.center());
    std::vector<std::int32_t> reach = destroy_boundary_cluster(g, bd);
    const bool center_connected =
        std::find(reach.begin(), reach.end(), center_idx) != reach.end();
    verify_destruction(g, bd);

    // stage 3: sprinkle vacant sites with one shared uniform per site, so the
    // outcome is monotone in delta under a fixed replica seed
    for (std::int32_t idx = 0; idx < cells; ++idx)
        if (!g.raw(idx) &&
            site_uniform(replica_seed, B.site_of(idx), channel_sprinkle, 0) < cfg.delta)
            g.set_raw(idx, 1);

    DeltaOutcome out;
    out.center_occupied = g.raw(center_idx) != 0;
    out.center_boundary_connected = center_connected;

    // crossing of the target box in its short direction
    const Region A = cfg.target();
    std::vector<Site> from, to;
    if (!cfg.horizontal) {
        for (std::int32_t x = A.x0(); x <= A.x1(); ++x) {
            from.push_back(Site{x, A.y1()});
            to.push_back(Site{x, A.y0()});
        }
    } else {
        for (std::int32_t y = A.y0(); y <= A.y1(); ++y) {
            from.push_back(Site{A.x0(), y});
            to.push_back(Site{A.x1(), y});
        }
    }
    out.crossing = occupied_path_exists(g, from, to, Adjacency::nearest_neighbor, A);
    return out;
}

Estimate estimate_p_n(const DeltaExperimentConfig& cfg, int workers) {
    cfg.validate();
    std::vector<std::uint8_t> hits(std::size_t(cfg.replicas), 0);
    parallel_for(cfg.replicas, workers, [&](std::int64_t r) {
        hits[std::size_t(r)] =
            delta_replica(cfg, replica_seed(cfg.seed, r)).crossing ? 1 : 0;
    });
    std::int64_t successes = 0;
    for (std::uint8_t h : hits) successes += h;
    return Estimate::wilson(successes, cfg.replicas, cfg.seed);
}

void FireStatConfig::validate() const {
    if (n < 0) throw std::invalid_argument("fire stats: n must be >= 0");
    if (m < 0 || m > n) throw std::invalid_argument("fire stats: need 0 <= m <= n");
    if (!(t > 0.0)) throw std::invalid_argument("fire stats: t must be > 0");
    if (replicas < 1) throw std::invalid_argument("fire stats: replicas must be >= 1");
    const bool has_lambda = lambda >= 0.0;
    const bool has_threshold = size_threshold >= 2;
    switch (model) {
        case ModelKind::eta:
        case ModelKind::zeta:
            if (!has_lambda || has_threshold)
                throw std::invalid_argument("fire stats: model needs lambda, not L");
            break;
        case ModelKind::eta_L:
            if (has_lambda || !has_threshold)
                throw std::invalid_argument("fire stats: threshold model needs L, not lambda");
            break;
    }
}

ReplicaFires extract_fires(const EventLog& log, std::int32_t m, double horizon) {
    const bool tree = log.header().model == ModelKind::zeta;
    ReplicaFires out;
    out.tau = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    for (const Event& e : log.events()) {
        if (e.type != EventType::burn || e.time > horizon) continue;
        if (tree) {
            // observation window = nodes within m generations of the root
            std::int32_t depth = -1;
            for (std::uint32_t v = std::uint32_t(e.site.x); v; v >>= 1) ++depth;
            if (depth > m) continue;
        } else {
            if (linf(e.site) > m) continue;
        }
        if (e.time < out.tau) {
            out.tau = e.time;
        } else if (e.time > out.tau && e.time < second) {
            second = e.time;
        }
    }
    out.at_least_one = std::isfinite(out.tau);
    out.at_least_two = std::isfinite(second);
    return out;
}

ReplicaFires fire_replica(const FireStatConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    EventLog log;
    switch (cfg.model) {
        case ModelKind::eta:
            log = run_eta(TrajectoryConfig::eta(Region::box(cfg.n), cfg.lambda, cfg.t, seed));
            break;
        case ModelKind::eta_L:
            log = run_eta_L(TrajectoryConfig::eta_threshold(Region::box(cfg.n),
                                                            cfg.size_threshold, cfg.t, seed));
            break;
        case ModelKind::zeta: {
            TreeConfig tc;
            tc.generations = cfg.n;
            tc.lambda = cfg.lambda;
            tc.horizon = cfg.t;
            tc.seed = seed;
            log = run_zeta(tc);
            break;
        }
    }
    return extract_fires(log, cfg.m, cfg.t);
}

FireStats fire_stats(const FireStatConfig& cfg, int workers) {
    cfg.validate();
    std::vector<ReplicaFires> results(std::size_t(cfg.replicas));
    parallel_for(cfg.replicas, workers, [&](std::int64_t r) {
        results[std::size_t(r)] = fire_replica(cfg, replica_seed(cfg.seed, r));
    });
    std::int64_t one = 0, two = 0;
    std::vector<double> taus;
    for (const ReplicaFires& rf : results) {
        one += rf.at_least_one ? 1 : 0;
        two += rf.at_least_two ? 1 : 0;
        if (std::isfinite(rf.tau)) taus.push_back(rf.tau);
    }
    FireStats out;
    out.at_least_one = Estimate::wilson(one, cfg.replicas, cfg.seed);
    out.at_least_two = Estimate::wilson(two, cfg.replicas, cfg.seed);
    out.tau_samples = std::move(taus);
    return out;
}

BoundCheck bound_check(const FireStatConfig& cfg, int workers) {
    cfg.validate();
    if (cfg.model != ModelKind::eta || cfg.m != 0)
        throw std::invalid_argument("bound_check: requires model eta with m = 0");
    const Region region = Region::box(cfg.n);
    const Site origin{0, 0};

    struct Row {
        double lhs = 0.0;
        double rhs = 0.0;
        std::uint8_t violation = 0;
    };
    std::vector<Row> rows(std::size_t(cfg.replicas));

    parallel_for(cfg.replicas, workers, [&](std::int64_t r) {
        const std::uint64_t seed = replica_seed(cfg.seed, r);
        const EventLog log =
            run_eta(TrajectoryConfig::eta(region, cfg.lambda, cfg.t, seed));
        bool origin_burned = false;
        for (const Event& e : log.events())
            if (e.type == EventType::burn && e.site == origin) {
                origin_burned = true;
                break;
            }

        const Grid sigma = run_sigma(seed, region, cfg.t);
        const auto cluster =
            occupied_cluster(sigma, origin, Adjacency::nearest_neighbor, region);
        bool reaches_boundary = false;
        for (Site v : cluster)
            if (linf(v) == cfg.n) {
                reaches_boundary = true;
                break;
            }

        Row row;
        row.lhs = origin_burned ? 1.0 : 0.0;
        row.rhs = reaches_boundary
                      ? 1.0
                      : -std::expm1(-cfg.lambda * cfg.t * double(cluster.size()));
        if (origin_burned) {
            // a fire at the origin needs an ignition ring somewhere in its
            // pure-growth cluster before t
            const ClockStream clocks(seed, cfg.lambda);
            bool found = false;
            for (Site v : cluster)
                if (clocks.events_through(v, ClockKind::ignition, cfg.t) > 0) {
                    found = true;
                    break;
                }
            row.violation = found ? 0 : 1;
        }
        rows[std::size_t(r)] = row;
    });

    std::vector<double> lhs_v, rhs_v, diff_v;
    lhs_v.reserve(rows.size());
    BoundCheck out;
    out.replicas = cfg.replicas;
    for (const Row& row : rows) {
        lhs_v.push_back(row.lhs);
        rhs_v.push_back(row.rhs);
        diff_v.push_back(row.rhs - row.lhs);
        out.origin_burns += row.lhs > 0.5 ? 1 : 0;
        out.necessary_violations += row.violation;
    }
    const double rn = std::sqrt(double(cfg.replicas));
    out.lhs = mean(lhs_v);
    out.rhs = mean(rhs_v);
    out.lhs_se = sample_sd(lhs_v) / rn;
    out.rhs_se = sample_sd(rhs_v) / rn;
    out.diff_se = std::max(sample_sd(diff_v) / rn, 1.0 / double(cfg.replicas));
    out.holds = out.lhs <= out.rhs + 3.0 * out.diff_se;
    return out;
}

Estimate xi_crossing_probe(std::int32_t annulus_i, double eps, std::int64_t replicas,
                           std::uint64_t seed, double p_c, int workers) {
    if (annulus_i < 2 || annulus_i % 2 != 0)
        throw std::invalid_argument("xi_crossing_probe: i must be a positive even integer");
    if (eps < 0.0) throw std::invalid_argument("xi_crossing_probe: eps must be >= 0");
    if (replicas < 1) throw std::invalid_argument("xi_crossing_probe: replicas must be >= 1");
    const std::int32_t r_in = pow3(annulus_i);
    const Region region = Region::box(5 * r_in);
    const double t_c = critical_time(p_c);

    std::vector<std::uint8_t> hits(std::size_t(replicas), 0);
    parallel_for(replicas, workers, [&](std::int64_t r) {
        const XiRun xi = run_xi(replica_seed(seed, r), region, t_c + eps, t_c);
        hits[std::size_t(r)] = radial_crossing(xi.state, r_in, 3 * r_in) ? 1 : 0;
    });
    std::int64_t successes = 0;
    for (std::uint8_t h : hits) successes += h;
    return Estimate::wilson(successes, replicas, seed);
}

bool probe_no_early_ignition(const EventLog& log, std::int32_t m, std::int32_t guard_radius) {
    if (log.header().model != ModelKind::eta)
        throw std::invalid_argument("probe_no_early_ignition: needs an eta log");
    double tau = std::numeric_limits<double>::infinity();
    for (const Event& e : log.events())
        if (e.type == EventType::burn && linf(e.site) <= m) {
            tau = e.time;
            break;
        }
    for (const Event& e : log.events()) {
        if (e.time > tau) break;
        if (e.type == EventType::ignite && linf(e.site) <= guard_radius) return false;
    }
    return true;
}

bool probe_vacant_ring_circuit(const Grid& state, const Scales& s) {
    if (s.k_radius >= s.K_radius)
        throw std::invalid_argument("probe_vacant_ring_circuit: scales form no ring");
    return vacant_star_circuit(state, Region::ring(s.k_radius, s.K_radius));
}

}  // namespace pyro
