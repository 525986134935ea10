#include "pyro/tree.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "pyro/clock_stream.hpp"

namespace pyro {

void TreeConfig::validate() const {
    if (generations < 0) throw std::invalid_argument("TreeConfig: generations must be >= 0");
    if (generations > 28) throw std::invalid_argument("TreeConfig: tree too large");
    if (lambda < 0.0) throw std::invalid_argument("TreeConfig: lambda must be >= 0");
    if (!(horizon > 0.0)) throw std::invalid_argument("TreeConfig: horizon must be > 0");
}

std::int64_t tree_node_count(std::int32_t generations) {
    return (std::int64_t(1) << (generations + 1)) - 1;
}

namespace {

struct Pending {
    double time;
    std::uint32_t node;
    std::uint8_t kind;  // 0 growth, 1 ignition

    friend bool operator>(const Pending& a, const Pending& b) {
        if (a.time != b.time) return a.time > b.time;
        if (a.node != b.node) return a.node > b.node;
        return a.kind > b.kind;
    }
};

// node v's clocks are keyed by site (v-1, 0); the 0-generation tree then
// shares its streams with the single-site box model
inline Site clock_site(std::uint32_t node) { return Site{std::int32_t(node) - 1, 0}; }

// Runs the trajectory; on_event(time, node, type) fires per record. Returns
// the first root burn time (+inf if none). stop_at_root_burn cuts the run
// short for sampling loops.
template <class OnEvent>
double zeta_core(const TreeConfig& cfg, bool stop_at_root_burn, OnEvent&& on_event) {
    cfg.validate();
    const std::uint32_t nodes = std::uint32_t(tree_node_count(cfg.generations));
    const ClockStream clocks(cfg.seed, cfg.lambda);
    std::vector<std::uint8_t> state(nodes + 1, 0);
    std::vector<double> acc(2 * (nodes + 1), 0.0);
    std::vector<std::uint32_t> index(2 * (nodes + 1), 0);
    std::priority_queue<Pending, std::vector<Pending>, std::greater<Pending>> queue;

    auto seed_clock = [&](std::uint32_t v, ClockKind k) {
        const double t = clocks.gap(clock_site(v), k, 0);
        acc[std::size_t(v) * 2 + std::uint32_t(k)] = t;
        if (t <= cfg.horizon) queue.push(Pending{t, v, std::uint8_t(k)});
    };
    auto advance_clock = [&](std::uint32_t v, ClockKind k) {
        const std::size_t slot = std::size_t(v) * 2 + std::uint32_t(k);
        const double t = acc[slot] + clocks.gap(clock_site(v), k, ++index[slot]);
        acc[slot] = t;
        if (t <= cfg.horizon) queue.push(Pending{t, v, std::uint8_t(k)});
    };

    for (std::uint32_t v = 1; v <= nodes; ++v) {
        seed_clock(v, ClockKind::growth);
        if (cfg.lambda > 0.0) seed_clock(v, ClockKind::ignition);
    }

    double first_root_burn_time = std::numeric_limits<double>::infinity();
    while (!queue.empty()) {
        const Pending ev = queue.top();
        queue.pop();
        if (ev.kind == 0) {
            advance_clock(ev.node, ClockKind::growth);
            if (!state[ev.node]) {
                state[ev.node] = 1;
                on_event(ev.time, ev.node, EventType::grow);
            }
        } else {
            advance_clock(ev.node, ClockKind::ignition);
            on_event(ev.time, ev.node, EventType::ignite);
            if (state[ev.node]) {
                // burn the maximal occupied path toward the root
                for (std::uint32_t w = ev.node;; w >>= 1) {
                    state[w] = 0;
                    on_event(ev.time, w, EventType::burn);
                    if (w == 1) {
                        if (first_root_burn_time == std::numeric_limits<double>::infinity())
                            first_root_burn_time = ev.time;
                        if (stop_at_root_burn) return first_root_burn_time;
                        break;
                    }
                    if (!state[w >> 1]) break;
                }
            }
        }
    }
    return first_root_burn_time;
}

}  // namespace

EventLog run_zeta(const TreeConfig& cfg) {
    LogHeader h;
    h.model = ModelKind::zeta;
    h.generations = cfg.generations;
    h.lambda = cfg.lambda;
    h.horizon = cfg.horizon;
    h.seed = cfg.seed;
    EventLog log(h);
    if (cfg.horizon <= 0.0) return log;
    zeta_core(cfg, false, [&](double t, std::uint32_t node, EventType type) {
        log.append(t, Site{std::int32_t(node), 0}, type);
    });
    return log;
}

double first_root_burn(const TreeConfig& cfg) {
    return zeta_core(cfg, true, [](double, std::uint32_t, EventType) {});
}

double tree_percolation_probability(double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("tree_percolation_probability: p outside [0,1]");
    if (p <= 0.5) return 0.0;
    return (2.0 * p - 1.0) / p;
}

double root_burn_upper_bound(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("root_burn_upper_bound: t must be > 0");
    return tree_percolation_probability(-std::expm1(-t));
}

double root_burn_lower_bound(double t) { return root_burn_upper_bound(t) / 2.0; }

double recursion_rhs(double g_window, double f_at_window_start, double window_start,
                     double lambda) {
    if (g_window < 0.0 || g_window > 1.0 || f_at_window_start < 0.0 ||
        f_at_window_start > 1.0)
        throw std::invalid_argument("recursion_rhs: probabilities outside [0,1]");
    if (!(window_start > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("recursion_rhs: need window_start > 0 and lambda > 0");
    return -std::expm1(-window_start) * std::exp(-lambda * window_start) *
           (g_window * g_window + 2.0 * g_window * (1.0 - f_at_window_start));
}

}  // namespace pyro
