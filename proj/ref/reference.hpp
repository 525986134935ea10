#pragma once

// Reference implementations used only to cross-check the main library. Every
// routine here deliberately takes a different algorithmic route from the code
// it validates: transitive closure instead of BFS, winding-number circuit
// search instead of the star-duality test, a set-of-sets partition instead of
// union-find, and a fixed-step chain with a std::mt19937_64 instead of the
// event-driven engine with counter-based streams.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pyro/grid.hpp"
#include "pyro/lattice.hpp"

namespace pyro::ref {

/// Occupied set reachable from v by brute-force closure: repeatedly sweep all
/// occupied pairs, adding any adjacent neighbor of a reached site, until the
/// set stops growing.
std::vector<Site> reachable_occupied(const Grid& grid, Site v, Adjacency adj,
                                     const Region& within);

/// True iff the given sites (as a subgraph of the ring under adj) contain a
/// cycle with nonzero winding number around the origin, i.e. a circuit
/// surrounding it. Found by BFS on the winding lift: walk the subgraph
/// tracking signed crossings of the cut ray below the positive x-axis; a site
/// reachable at two different winding levels closes a surrounding circuit.
bool winding_circuit_exists(const std::vector<Site>& sites, const Region& ring,
                            Adjacency adj);

/// Literal simple-cycle enumeration with a winding check (exponential; tiny
/// inputs only). Throws std::runtime_error when the step budget is exhausted.
bool simple_cycle_circuit_exists(const std::vector<Site>& sites, const Region& ring,
                                 Adjacency adj, std::int64_t max_steps = 20'000'000);

/// Set-of-sets mirror of the epoch union-find.
class NaiveUnionFind {
public:
    std::int64_t insert(Site v);              // returns epoch id
    std::int64_t unite(std::int64_t a, std::int64_t b);
    std::int64_t size(std::int64_t id) const;
    std::vector<Site> members(std::int64_t id) const;  // sorted
    void burn(std::int64_t id);
    bool is_live(std::int64_t id) const;
    std::int64_t live_at(Site v) const;       // 0 when vacant

private:
    std::int64_t find_set(std::int64_t id) const;  // index into sets_
    std::int64_t next_id_ = 1;
    std::vector<std::set<std::int64_t>> sets_;     // live epoch ids, one set per cluster
    std::map<std::int64_t, Site> site_of_;
    std::map<Site, std::int64_t> live_;
};

/// First time the origin burns in a fixed-step (dt) discretization of the
/// forest-fire chain on `region`: per step, vacant sites grow with
/// probability 1-e^{-dt}, then occupied sites ignite with probability
/// 1-e^{-lambda dt}, burning their occupied cluster. Returns +inf when the
/// origin never burns before the horizon.
double discretized_first_origin_burn(const Region& region, double lambda, double dt,
                                     double horizon, std::uint64_t seed);

}  // namespace pyro::ref
