#include "pyro/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "pyro/cluster_index.hpp"

namespace pyro {

TrajectoryConfig TrajectoryConfig::eta(Region region, double lambda, double horizon,
                                       std::uint64_t seed) {
    TrajectoryConfig c;
    c.region = std::move(region);
    c.lambda = lambda;
    c.horizon = horizon;
    c.seed = seed;
    return c;
}

TrajectoryConfig TrajectoryConfig::eta_threshold(Region region, std::int64_t L,
                                                 double horizon, std::uint64_t seed) {
    TrajectoryConfig c;
    c.region = std::move(region);
    c.size_threshold = L;
    c.horizon = horizon;
    c.seed = seed;
    return c;
}

void TrajectoryConfig::validate() const {
    const bool has_lambda = lambda >= 0.0;
    const bool has_threshold = size_threshold >= 2;
    if (has_lambda == has_threshold)
        throw std::invalid_argument(
            "TrajectoryConfig: exactly one of lambda and size_threshold must be set");
    if (!(horizon > 0.0)) throw std::invalid_argument("TrajectoryConfig: horizon must be > 0");
    if (region.kind() == Region::Kind::ring)
        throw std::invalid_argument("TrajectoryConfig: trajectories run on boxes/rectangles");
    if (!(p_c > 0.0 && p_c < 1.0)) throw std::invalid_argument("TrajectoryConfig: p_c in (0,1)");
}

namespace {

struct Pending {
    double time;
    std::int32_t site_idx;
    std::uint8_t kind;  // 0 growth, 1 ignition

    // simultaneous events resolve by (time, site index, kind)
    friend bool operator>(const Pending& a, const Pending& b) {
        if (a.time != b.time) return a.time > b.time;
        if (a.site_idx != b.site_idx) return a.site_idx > b.site_idx;
        return a.kind > b.kind;
    }
};

using Queue = std::priority_queue<Pending, std::vector<Pending>, std::greater<Pending>>;

// per-site clock cursors; times accumulate gap by gap so advancing is O(1)
struct Cursors {
    std::vector<double> acc;
    std::vector<std::uint32_t> index;
};

class LatticeEngine {
public:
    LatticeEngine(const TrajectoryConfig& cfg, ModelKind model)
        : cfg_(cfg),
          model_(model),
          clocks_(cfg.seed, model == ModelKind::eta ? std::max(cfg.lambda, 0.0) : 0.0),
          grid_(cfg.region),
          log_([&] {
              LogHeader h;
              h.model = model;
              h.region = cfg.region;
              h.lambda = model == ModelKind::eta ? cfg.lambda : 0.0;
              h.size_threshold = model == ModelKind::eta_L ? cfg.size_threshold : 0;
              h.horizon = cfg.horizon;
              h.seed = cfg.seed;
              h.p_c = cfg.p_c;
              return h;
          }()) {}

    EventLog run(const StateObserver& observe) {
        const Region& region = cfg_.region;
        const std::int64_t cells = region.bounding_count();
        growth_.acc.assign(std::size_t(cells), 0.0);
        growth_.index.assign(std::size_t(cells), 0);
        const bool with_ignition = model_ == ModelKind::eta && cfg_.lambda > 0.0;
        if (with_ignition) {
            ignition_.acc.assign(std::size_t(cells), 0.0);
            ignition_.index.assign(std::size_t(cells), 0);
        }
        ClusterIndex index(region);

        for (std::int32_t idx = 0; idx < cells; ++idx) {
            if (!region.contains_index(idx)) continue;
            const Site v = region.site_of(idx);
            seed_clock(idx, v, ClockKind::growth, growth_);
            if (with_ignition) seed_clock(idx, v, ClockKind::ignition, ignition_);
        }

        while (!queue_.empty()) {
            const Pending ev = queue_.top();
            queue_.pop();
            const Site v = region.site_of(ev.site_idx);
            if (ev.kind == 0) {
                advance_clock(ev.site_idx, v, ClockKind::growth, growth_);
                if (!grid_.raw(ev.site_idx)) {
                    grid_.set_raw(ev.site_idx, 1);
                    log_.append(ev.time, v, EventType::grow);
                    if (model_ == ModelKind::eta_L) threshold_burn(ev.time, v, index);
                }
            } else {
                advance_clock(ev.site_idx, v, ClockKind::ignition, ignition_);
                log_.append(ev.time, v, EventType::ignite);
                if (grid_.raw(ev.site_idx)) burn_cluster(ev.time, ev.site_idx);
            }
            if (observe) observe(ev.time, grid_);
        }
        return std::move(log_);
    }

private:
    void seed_clock(std::int32_t idx, Site v, ClockKind k, Cursors& c) {
        const double t = clocks_.gap(v, k, 0);
        c.acc[std::size_t(idx)] = t;
        if (t <= cfg_.horizon) queue_.push(Pending{t, idx, std::uint8_t(k)});
    }

    void advance_clock(std::int32_t idx, Site v, ClockKind k, Cursors& c) {
        const std::uint32_t next = ++c.index[std::size_t(idx)];
        const double t = c.acc[std::size_t(idx)] + clocks_.gap(v, k, next);
        c.acc[std::size_t(idx)] = t;
        if (t <= cfg_.horizon) queue_.push(Pending{t, idx, std::uint8_t(k)});
    }

    // ignition model: BFS the occupied cluster and clear it
    void burn_cluster(double time, std::int32_t start_idx) {
        const Region& region = cfg_.region;
        scratch_.clear();
        scratch_.push_back(start_idx);
        grid_.set_raw(start_idx, 0);
        log_.append(time, region.site_of(start_idx), EventType::burn);
        for (std::size_t qi = 0; qi < scratch_.size(); ++qi) {
            const Site v = region.site_of(scratch_[qi]);
            for (int d = 0; d < 4; ++d) {
                const Site w{v.x + neighbor_steps[std::size_t(d)].x,
                             v.y + neighbor_steps[std::size_t(d)].y};
                if (!region.contains(w)) continue;
                const std::int32_t widx = region.index_of(w);
                if (!grid_.raw(widx)) continue;
                grid_.set_raw(widx, 0);
                log_.append(time, w, EventType::burn);
                scratch_.push_back(widx);
            }
        }
    }

    // threshold model: grow into the epoch index, burn when the cluster is large
    void threshold_burn(double time, Site v, ClusterIndex& index) {
        ClusterIndex::Handle h = index.insert(v);
        for (int d = 0; d < 4; ++d) {
            const Site w{v.x + neighbor_steps[std::size_t(d)].x,
                         v.y + neighbor_steps[std::size_t(d)].y};
            if (!cfg_.region.contains(w)) continue;
            if (!grid_.raw(cfg_.region.index_of(w))) continue;
            h = index.unite(h, index.live_at(w));
        }
        if (index.size(h) >= cfg_.size_threshold) {
            for (Site w : index.members(h)) {
                grid_.set_raw(cfg_.region.index_of(w), 0);
                log_.append(time, w, EventType::burn);
            }
            index.burn(h);
        }
    }

    const TrajectoryConfig& cfg_;
    ModelKind model_;
    ClockStream clocks_;
    Grid grid_;
    EventLog log_;
    Queue queue_;
    Cursors growth_;
    Cursors ignition_;
    std::vector<std::int32_t> scratch_;
};

}  // namespace

EventLog run_eta(const TrajectoryConfig& cfg) { return run_eta(cfg, StateObserver{}); }

EventLog run_eta(const TrajectoryConfig& cfg, const StateObserver& observe) {
    if (cfg.lambda < 0.0)
        throw std::invalid_argument("run_eta: config must carry an ignition rate");
    if (cfg.horizon <= 0.0) return EventLog{[&] {
        LogHeader h;
        h.model = ModelKind::eta;
        h.region = cfg.region;
        h.lambda = cfg.lambda;
        h.horizon = cfg.horizon;
        h.seed = cfg.seed;
        h.p_c = cfg.p_c;
        return h;
    }()};
    return LatticeEngine(cfg, ModelKind::eta).run(observe);
}

EventLog run_eta_L(const TrajectoryConfig& cfg) { return run_eta_L(cfg, StateObserver{}); }

EventLog run_eta_L(const TrajectoryConfig& cfg, const StateObserver& observe) {
    if (cfg.size_threshold < 2)
        throw std::invalid_argument("run_eta_L: config must carry a size threshold >= 2");
    if (cfg.horizon <= 0.0) return EventLog{[&] {
        LogHeader h;
        h.model = ModelKind::eta_L;
        h.region = cfg.region;
        h.size_threshold = cfg.size_threshold;
        h.horizon = cfg.horizon;
        h.seed = cfg.seed;
        h.p_c = cfg.p_c;
        return h;
    }()};
    return LatticeEngine(cfg, ModelKind::eta_L).run(observe);
}

Grid run_sigma(std::uint64_t seed, const Region& region, double t) {
    const ClockStream clocks(seed, 0.0);
    Grid g(region);
    const std::int64_t cells = region.bounding_count();
    for (std::int32_t idx = 0; idx < cells; ++idx) {
        if (!region.contains_index(idx)) continue;
        if (clocks.gap(region.site_of(idx), ClockKind::growth, 0) <= t) g.set_raw(idx, 1);
    }
    return g;
}

XiRun run_xi(std::uint64_t seed, const Region& region, double t, double t_c) {
    if (region.kind() == Region::Kind::ring)
        throw std::domain_error("run_xi: region must be a box or rectangle");
    std::int32_t max_i = -1;
    for (std::int32_t i = 2; i <= 18; i += 2) {
        const std::int32_t outer = 5 * pow3(i);
        const Region probe = Region::box(outer);
        if (region.x0() <= probe.x0() && region.x1() >= probe.x1() &&
            region.y0() <= probe.y0() && region.y1() >= probe.y1())
            max_i = i;
        else
            break;
    }
    if (max_i < 2) throw std::domain_error("run_xi: region must contain at least annulus(2)");

    if (t < t_c) return XiRun{run_sigma(seed, region, t), max_i, 0};

    Grid g = run_sigma(seed, region, t_c);
    std::int64_t removed = 0;
    for (std::int32_t i = 2; i <= max_i; i += 2) {
        const Region ann = Region::annulus(i);
        for (const auto& cluster : clusters_in_region(g, ann, Adjacency::nearest_neighbor)) {
            // a circuit around the origin must put sites on all four
            // half-axes; skip the full duality test otherwise
            bool xp = false, xn = false, yp = false, yn = false;
            for (Site v : cluster) {
                xp = xp || (v.y == 0 && v.x > 0);
                xn = xn || (v.y == 0 && v.x < 0);
                yp = yp || (v.x == 0 && v.y > 0);
                yn = yn || (v.x == 0 && v.y < 0);
            }
            if (!(xp && xn && yp && yn)) continue;
            if (!surrounds_origin(cluster, ann)) continue;
            for (Site v : cluster) g.set_raw(region.index_of(v), 0);
            removed += std::int64_t(cluster.size());
        }
    }
    if (t > t_c) {
        const ClockStream clocks(seed, 0.0);
        const std::int64_t cells = region.bounding_count();
        for (std::int32_t idx = 0; idx < cells; ++idx) {
            if (!region.contains_index(idx) || g.raw(idx)) continue;
            const double ring = clocks.first_event_after(region.site_of(idx),
                                                         ClockKind::growth, t_c);
            if (ring <= t) g.set_raw(idx, 1);
        }
    }
    return XiRun{std::move(g), max_i, removed};
}

namespace {

std::int32_t floor_radius(double x) {
    // 1e-3^{-1/3} evaluates to 9.999999999999998; absorb that kind of noise
    return std::int32_t(std::floor(x + 1e-9));
}

}  // namespace

Scales scales(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw std::invalid_argument("scales: lambda must lie in (0,1]");
    Scales s;
    s.K = std::pow(lambda, -1.0 / 3.0);
    s.k = std::pow(lambda, -1.0 / 4.0);
    s.K_radius = floor_radius(s.K);
    s.k_radius = floor_radius(s.k);
    return s;
}

Scales scales_threshold(std::int64_t L) {
    if (L < 2) throw std::invalid_argument("scales_threshold: L must be >= 2");
    Scales s;
    s.K = std::pow(double(L), 1.0 / 3.0);
    s.k = std::pow(double(L), 1.0 / 4.0);
    s.K_radius = floor_radius(s.K);
    s.k_radius = floor_radius(s.k);
    return s;
}

}  // namespace pyro
