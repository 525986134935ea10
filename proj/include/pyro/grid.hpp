#pragma once

#include <cstdint>
#include <vector>

#include "pyro/lattice.hpp"

namespace pyro {

/// Site occupancy over a region: 1 = occupied (tree), 0 = vacant. Storage
/// spans the region's bounding rectangle; cells outside the region stay 0.
class Grid {
public:
    explicit Grid(const Region& region)
        : region_(region), cells_(std::size_t(region.bounding_count()), 0) {}

    const Region& region() const { return region_; }

    bool occupied(Site v) const {
        if (!region_.contains(v)) throw std::domain_error("Grid: site outside region");
        return cells_[std::size_t(region_.index_of(v))] != 0;
    }
    void set(Site v, bool occ) {
        if (!region_.contains(v)) throw std::domain_error("Grid: site outside region");
        cells_[std::size_t(region_.index_of(v))] = occ ? 1 : 0;
    }

    // unchecked index access for hot loops
    std::uint8_t raw(std::int32_t idx) const { return cells_[std::size_t(idx)]; }
    void set_raw(std::int32_t idx, std::uint8_t s) { cells_[std::size_t(idx)] = s; }

    std::int64_t occupied_count() const;
    std::vector<Site> occupied_sites() const;

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.region_ == b.region_ && a.cells_ == b.cells_;
    }

private:
    Region region_;
    std::vector<std::uint8_t> cells_;
};

/// Maximal adj-connected occupied set containing v, restricted to `within`
/// (BFS in the fixed neighbor order). Empty when v is vacant. Throws
/// std::domain_error when v is not a site of `within`.
std::vector<Site> occupied_cluster(const Grid& grid, Site v, Adjacency adj,
                                   const Region& within);

/// Partition of the occupied sites of `within` into maximal adj-connected
/// clusters, in row-major discovery order.
std::vector<std::vector<Site>> clusters_in_region(const Grid& grid, const Region& within,
                                                  Adjacency adj);

/// True iff `cluster` (a subset of the ring region) contains a
/// nearest-neighbor circuit around the origin. Planar duality: such a circuit
/// exists iff no star path of non-cluster ring sites joins the ring's inner
/// circuit to its outer circuit. Throws std::domain_error when the region is
/// not a ring or the cluster leaves it.
bool surrounds_origin(const std::vector<Site>& cluster, const Region& ring);

/// True iff an occupied nearest-neighbor path inside `within` joins some site
/// of `from` to some site of `to` (endpoints must be occupied themselves).
bool occupied_path_exists(const Grid& grid, const std::vector<Site>& from,
                          const std::vector<Site>& to, Adjacency adj, const Region& within);

/// True iff the vacant sites of the ring contain a star circuit around the
/// origin, i.e. no occupied nearest-neighbor path crosses the ring from its
/// inner circuit to its outer circuit.
bool vacant_star_circuit(const Grid& grid, const Region& ring);

/// True iff an occupied nearest-neighbor path (inside the grid's region)
/// joins the site circuit at L-inf radius r_from to the circuit at r_to.
bool radial_crossing(const Grid& grid, std::int32_t r_from, std::int32_t r_to);

}  // namespace pyro
