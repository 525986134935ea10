#include "pyro/grid.hpp"

#include <algorithm>
#include <cstdlib>

namespace pyro {

std::int64_t Grid::occupied_count() const {
    std::int64_t n = 0;
    for (std::int32_t idx = 0; idx < std::int32_t(cells_.size()); ++idx)
        if (cells_[std::size_t(idx)] && region_.contains_index(idx)) ++n;
    return n;
}

std::vector<Site> Grid::occupied_sites() const {
    std::vector<Site> out;
    for (std::int32_t idx = 0; idx < std::int32_t(cells_.size()); ++idx)
        if (cells_[std::size_t(idx)] && region_.contains_index(idx))
            out.push_back(region_.site_of(idx));
    return out;
}

namespace {

// BFS over `within` from the seed sites, stepping only onto sites where
// admit() is true. Returns visit order.
template <class Admit>
std::vector<Site> flood(const std::vector<Site>& seeds, Adjacency adj, const Region& within,
                        Admit admit) {
    std::vector<std::uint8_t> seen(std::size_t(within.bounding_count()), 0);
    std::vector<Site> order;  // doubles as the FIFO queue
    for (Site s : seeds) {
        if (!within.contains(s) || !admit(s)) continue;
        const std::size_t idx = std::size_t(within.index_of(s));
        if (seen[idx]) continue;
        seen[idx] = 1;
        order.push_back(s);
    }
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        const Site v = order[qi];
        for (int i = 0; i < degree(adj); ++i) {
            const Site w{v.x + neighbor_steps[std::size_t(i)].x,
                         v.y + neighbor_steps[std::size_t(i)].y};
            if (!within.contains(w) || !admit(w)) continue;
            const std::size_t idx = std::size_t(within.index_of(w));
            if (seen[idx]) continue;
            seen[idx] = 1;
            order.push_back(w);
        }
    }
    return order;
}

}  // namespace

std::vector<Site> occupied_cluster(const Grid& grid, Site v, Adjacency adj,
                                   const Region& within) {
    if (!within.contains(v)) throw std::domain_error("occupied_cluster: site outside region");
    const Region& gr = grid.region();
    auto occ = [&](Site s) { return gr.contains(s) && grid.raw(gr.index_of(s)) != 0; };
    if (!occ(v)) return {};
    return flood({v}, adj, within, occ);
}

std::vector<std::vector<Site>> clusters_in_region(const Grid& grid, const Region& within,
                                                  Adjacency adj) {
    const Region& gr = grid.region();
    auto occ = [&](Site s) { return gr.contains(s) && grid.raw(gr.index_of(s)) != 0; };
    // one shared visited array across all clusters
    std::vector<std::uint8_t> seen(std::size_t(within.bounding_count()), 0);
    std::vector<std::vector<Site>> parts;
    const std::int64_t cells = within.bounding_count();
    for (std::int32_t start = 0; start < cells; ++start) {
        if (seen[std::size_t(start)] || !within.contains_index(start)) continue;
        const Site v = within.site_of(start);
        if (!occ(v)) continue;
        seen[std::size_t(start)] = 1;
        std::vector<Site> part{v};
        for (std::size_t qi = 0; qi < part.size(); ++qi) {
            const Site u = part[qi];
            for (int i = 0; i < degree(adj); ++i) {
                const Site w{u.x + neighbor_steps[std::size_t(i)].x,
                             u.y + neighbor_steps[std::size_t(i)].y};
                if (!within.contains(w) || !occ(w)) continue;
                const std::size_t idx = std::size_t(within.index_of(w));
                if (seen[idx]) continue;
                seen[idx] = 1;
                part.push_back(w);
            }
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

bool surrounds_origin(const std::vector<Site>& cluster, const Region& ring) {
    if (ring.kind() != Region::Kind::ring)
        throw std::domain_error("surrounds_origin: region is not a ring");
    std::vector<std::uint8_t> in_cluster(std::size_t(ring.bounding_count()), 0);
    for (Site v : cluster) {
        if (!ring.contains(v))
            throw std::domain_error("surrounds_origin: cluster leaves the ring");
        in_cluster[std::size_t(ring.index_of(v))] = 1;
    }
    // duality: a nearest-neighbor circuit of the cluster surrounds the origin
    // iff no star path of non-cluster ring sites joins the inner circuit to
    // the outer circuit
    const std::int32_t inner = ring.inner_radius() + 1;
    const std::int32_t outer = ring.outer_radius();
    std::vector<Site> seeds;
    for (Site v : ring.sites())
        if (linf(v) == inner && !in_cluster[std::size_t(ring.index_of(v))])
            seeds.push_back(v);
    auto admit = [&](Site s) { return !in_cluster[std::size_t(ring.index_of(s))]; };
    for (Site v : flood(seeds, Adjacency::star, ring, admit))
        if (linf(v) == outer) return false;
    return true;
}

bool occupied_path_exists(const Grid& grid, const std::vector<Site>& from,
                          const std::vector<Site>& to, Adjacency adj, const Region& within) {
    const Region& gr = grid.region();
    auto occ = [&](Site s) { return gr.contains(s) && grid.raw(gr.index_of(s)) != 0; };
    std::vector<std::uint8_t> target(std::size_t(within.bounding_count()), 0);
    bool any_target = false;
    for (Site v : to)
        if (within.contains(v)) {
            target[std::size_t(within.index_of(v))] = 1;
            any_target = true;
        }
    if (!any_target) return false;
    for (Site v : flood(from, adj, within, occ))
        if (target[std::size_t(within.index_of(v))]) return true;
    return false;
}

bool vacant_star_circuit(const Grid& grid, const Region& ring) {
    if (ring.kind() != Region::Kind::ring)
        throw std::domain_error("vacant_star_circuit: region is not a ring");
    if (!grid.region().in_bounding(Site{ring.x0(), ring.y0()}) ||
        !grid.region().in_bounding(Site{ring.x1(), ring.y1()}))
        throw std::domain_error("vacant_star_circuit: ring leaves the grid");
    const Boundary b = boundary(ring);
    // The dual crossing must start at sites with a nearest neighbor in the
    // hole: a star circuit can cut diagonally past the inner ring's corner
    // sites, so corners are not valid crossing starts.
    const std::int32_t inner = ring.inner_radius();
    std::vector<Site> from;
    for (Site v : b.inner_ring)
        if (std::abs(v.x) <= inner || std::abs(v.y) <= inner) from.push_back(v);
    return !occupied_path_exists(grid, from, b.outer_ring, Adjacency::nearest_neighbor,
                                 ring);
}

bool radial_crossing(const Grid& grid, std::int32_t r_from, std::int32_t r_to) {
    const Region& gr = grid.region();
    std::vector<Site> from, to;
    for (Site v : gr.sites()) {
        const std::int32_t r = linf(v);
        if (r == r_from) from.push_back(v);
        if (r == r_to) to.push_back(v);
    }
    return occupied_path_exists(grid, from, to, Adjacency::nearest_neighbor, gr);
}

}  // namespace pyro
