#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace pyro::ref {

namespace {

bool adjacent(Site a, Site b, Adjacency adj) {
    const std::int32_t dx = std::abs(a.x - b.x);
    const std::int32_t dy = std::abs(a.y - b.y);
    if (adj == Adjacency::nearest_neighbor) return dx + dy == 1;
    return dx <= 1 && dy <= 1 && (dx + dy) > 0;
}

// signed crossing of the cut ray {y = -1/2, x > 0} by the step u -> v:
// +1 downward, -1 upward, 0 otherwise
int cut_crossing(Site u, Site v) {
    if (!((u.y == 0 && v.y == -1) || (u.y == -1 && v.y == 0))) return 0;
    if (u.x + v.x <= 0) return 0;  // the segment meets y = -1/2 at x = (u.x+v.x)/2
    return u.y == 0 ? 1 : -1;
}

}  // namespace

std::vector<Site> reachable_occupied(const Grid& grid, Site v, Adjacency adj,
                                     const Region& within) {
    if (!within.contains(v)) throw std::domain_error("reachable_occupied: site outside region");
    std::vector<Site> occupied;
    for (Site s : within.sites())
        if (grid.region().contains(s) && grid.occupied(s)) occupied.push_back(s);
    if (!grid.region().contains(v) || !grid.occupied(v)) return {};

    std::vector<std::uint8_t> reached(occupied.size(), 0);
    for (std::size_t i = 0; i < occupied.size(); ++i)
        if (occupied[i] == v) reached[i] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < occupied.size(); ++i) {
            if (!reached[i]) continue;
            for (std::size_t j = 0; j < occupied.size(); ++j) {
                if (reached[j] || !adjacent(occupied[i], occupied[j], adj)) continue;
                reached[j] = 1;
                changed = true;
            }
        }
    }
    std::vector<Site> out;
    for (std::size_t i = 0; i < occupied.size(); ++i)
        if (reached[i]) out.push_back(occupied[i]);
    std::sort(out.begin(), out.end());
    return out;
}

bool winding_circuit_exists(const std::vector<Site>& sites, const Region& ring,
                            Adjacency adj) {
    if (ring.kind() != Region::Kind::ring)
        throw std::domain_error("winding_circuit_exists: region is not a ring");
    std::vector<std::int32_t> of_site(std::size_t(ring.bounding_count()), -1);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (!ring.contains(sites[i]))
            throw std::domain_error("winding_circuit_exists: site outside ring");
        of_site[std::size_t(ring.index_of(sites[i]))] = std::int32_t(i);
    }
    // levels generous enough for any simple path plus one circuit traversal:
    // each crosses the cut at most ~2*outer times
    const std::int32_t max_level = 4 * ring.outer_radius() + 8;
    const std::int32_t levels = 2 * max_level + 1;
    std::vector<std::uint8_t> seen(sites.size() * std::size_t(levels), 0);
    std::vector<std::uint8_t> seen_any(sites.size(), 0);
    std::vector<std::pair<std::int32_t, std::int32_t>> queue;  // (site id, level)

    for (std::size_t start = 0; start < sites.size(); ++start) {
        if (seen_any[start]) continue;
        queue.clear();
        queue.emplace_back(std::int32_t(start), 0);
        seen[start * std::size_t(levels) + std::size_t(max_level)] = 1;
        seen_any[start] = 1;
        std::vector<std::int32_t> level_of(sites.size(), std::numeric_limits<std::int32_t>::min());
        level_of[start] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const auto [id, level] = queue[qi];
            const Site u = sites[std::size_t(id)];
            for (int d = 0; d < degree(adj); ++d) {
                const Site w{u.x + neighbor_steps[std::size_t(d)].x,
                             u.y + neighbor_steps[std::size_t(d)].y};
                if (!ring.contains(w)) continue;
                const std::int32_t wid = of_site[std::size_t(ring.index_of(w))];
                if (wid < 0) continue;
                const std::int32_t wl = level + cut_crossing(u, w);
                if (wl < -max_level || wl > max_level) continue;
                const std::size_t key =
                    std::size_t(wid) * std::size_t(levels) + std::size_t(wl + max_level);
                if (seen[key]) continue;
                seen[key] = 1;
                seen_any[std::size_t(wid)] = 1;
                if (level_of[std::size_t(wid)] == std::numeric_limits<std::int32_t>::min())
                    level_of[std::size_t(wid)] = wl;
                else if (level_of[std::size_t(wid)] != wl)
                    return true;  // same site at two winding levels
                queue.emplace_back(wid, wl);
            }
        }
    }
    return false;
}

namespace {

struct CycleSearch {
    const std::vector<Site>& sites;
    const Region& ring;
    Adjacency adj;
    std::int64_t budget;
    std::vector<std::vector<std::int32_t>> nbrs;
    std::vector<std::uint8_t> on_path;

    bool dfs(std::int32_t start, std::int32_t u, int winding) {
        if (--budget <= 0)
            throw std::runtime_error("simple_cycle_circuit_exists: budget exhausted");
        for (std::int32_t w : nbrs[std::size_t(u)]) {
            const int cross = cut_crossing(sites[std::size_t(u)], sites[std::size_t(w)]);
            if (w == start && winding + cross != 0) return true;
            if (w <= start || on_path[std::size_t(w)]) continue;  // canonical: min site = start
            on_path[std::size_t(w)] = 1;
            if (dfs(start, w, winding + cross)) return true;
            on_path[std::size_t(w)] = 0;
        }
        return false;
    }
};

}  // namespace

bool simple_cycle_circuit_exists(const std::vector<Site>& sites, const Region& ring,
                                 Adjacency adj, std::int64_t max_steps) {
    CycleSearch cs{sites, ring, adj, max_steps, {}, {}};
    cs.nbrs.resize(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = 0; j < sites.size(); ++j)
            if (i != j && adjacent(sites[i], sites[j], adj))
                cs.nbrs[i].push_back(std::int32_t(j));
    cs.on_path.assign(sites.size(), 0);
    for (std::int32_t s = 0; s < std::int32_t(sites.size()); ++s) {
        cs.on_path[std::size_t(s)] = 1;
        if (cs.dfs(s, s, 0)) return true;
        cs.on_path[std::size_t(s)] = 0;
    }
    return false;
}

std::int64_t NaiveUnionFind::insert(Site v) {
    if (live_.count(v)) throw std::logic_error("NaiveUnionFind: site already live");
    const std::int64_t id = next_id_++;
    sets_.push_back({id});
    site_of_[id] = v;
    live_[v] = id;
    return id;
}

std::int64_t NaiveUnionFind::find_set(std::int64_t id) const {
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (sets_[i].count(id)) return std::int64_t(i);
    throw std::logic_error("NaiveUnionFind: dead handle");
}

std::int64_t NaiveUnionFind::unite(std::int64_t a, std::int64_t b) {
    const std::int64_t ia = find_set(a);
    const std::int64_t ib = find_set(b);
    if (ia == ib) return *sets_[std::size_t(ia)].begin();
    sets_[std::size_t(ia)].insert(sets_[std::size_t(ib)].begin(), sets_[std::size_t(ib)].end());
    sets_.erase(sets_.begin() + ib);
    const std::int64_t ia2 = find_set(a);
    return *sets_[std::size_t(ia2)].begin();
}

std::int64_t NaiveUnionFind::size(std::int64_t id) const {
    return std::int64_t(sets_[std::size_t(find_set(id))].size());
}

std::vector<Site> NaiveUnionFind::members(std::int64_t id) const {
    std::vector<Site> out;
    for (std::int64_t e : sets_[std::size_t(find_set(id))]) out.push_back(site_of_.at(e));
    std::sort(out.begin(), out.end());
    return out;
}

void NaiveUnionFind::burn(std::int64_t id) {
    const std::int64_t i = find_set(id);
    for (std::int64_t e : sets_[std::size_t(i)]) live_.erase(site_of_.at(e));
    sets_.erase(sets_.begin() + i);
}

bool NaiveUnionFind::is_live(std::int64_t id) const {
    for (const auto& s : sets_)
        if (s.count(id)) return true;
    return false;
}

std::int64_t NaiveUnionFind::live_at(Site v) const {
    const auto it = live_.find(v);
    return it == live_.end() ? 0 : it->second;
}

double discretized_first_origin_burn(const Region& region, double lambda, double dt,
                                     double horizon, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double p_grow = -std::expm1(-dt);
    const double p_ignite = -std::expm1(-lambda * dt);
    const std::int64_t steps = std::int64_t(std::ceil(horizon / dt));
    const std::int64_t cells = region.bounding_count();
    const Site origin{0, 0};
    if (!region.contains(origin))
        throw std::domain_error("discretized_first_origin_burn: origin outside region");
    const std::int32_t origin_idx = region.index_of(origin);

    std::vector<std::uint8_t> state(std::size_t(cells), 0);
    std::vector<std::int32_t> stack;
    for (std::int64_t step = 1; step <= steps; ++step) {
        for (std::int32_t idx = 0; idx < cells; ++idx)
            if (!state[std::size_t(idx)] && region.contains_index(idx) &&
                unif(rng) < p_grow)
                state[std::size_t(idx)] = 1;
        for (std::int32_t idx = 0; idx < cells; ++idx) {
            if (!state[std::size_t(idx)] || unif(rng) >= p_ignite) continue;
            bool origin_burned = false;
            stack.assign(1, idx);
            state[std::size_t(idx)] = 0;
            if (idx == origin_idx) origin_burned = true;
            while (!stack.empty()) {
                const Site v = region.site_of(stack.back());
                stack.pop_back();
                for (int d = 0; d < 4; ++d) {
                    const Site w{v.x + neighbor_steps[std::size_t(d)].x,
                                 v.y + neighbor_steps[std::size_t(d)].y};
                    if (!region.contains(w)) continue;
                    const std::int32_t widx = region.index_of(w);
                    if (!state[std::size_t(widx)]) continue;
                    state[std::size_t(widx)] = 0;
                    if (widx == origin_idx) origin_burned = true;
                    stack.push_back(widx);
                }
            }
            if (origin_burned) return double(step) * dt;
        }
    }
    return std::numeric_limits<double>::infinity();
}

}  // namespace pyro::ref
