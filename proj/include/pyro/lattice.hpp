#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pyro {

/// A site (vertex) of the square lattice Z^2.
struct Site {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend constexpr bool operator==(Site a, Site b) { return a.x == b.x && a.y == b.y; }
    friend constexpr bool operator!=(Site a, Site b) { return !(a == b); }
    // row-major order, matching packed indices
    friend constexpr bool operator<(Site a, Site b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

constexpr std::int32_t linf(Site v) {
    const std::int32_t ax = v.x < 0 ? -v.x : v.x;
    const std::int32_t ay = v.y < 0 ? -v.y : v.y;
    return ax > ay ? ax : ay;
}

/// nearest_neighbor: (i,j) ~ (k,l) iff |i-k| + |j-l| = 1.
/// star: nearest_neighbor plus the two diagonals of each unit face (the
/// 8-neighborhood of the matching lattice).
enum class Adjacency { nearest_neighbor, star };

inline constexpr int degree(Adjacency adj) { return adj == Adjacency::star ? 8 : 4; }

/// Fixed traversal order E, W, N, S, then NE, NW, SE, SW. Every loop in the
/// library walks neighbors in this order so trajectories are bit-reproducible.
inline constexpr std::array<Site, 8> neighbor_steps = {
    Site{1, 0}, Site{-1, 0}, Site{0, 1}, Site{0, -1},
    Site{1, 1}, Site{-1, 1}, Site{1, -1}, Site{-1, -1}};

std::int32_t pow3(std::int32_t i);

/// A finite site set: box(n) = [-n,n]^2, an axis-aligned rectangle, or a
/// centered ring B(outer) \ B(inner). annulus(i) is the standard ring
/// B(5*3^i) \ B(3^i) for positive even i; rings at other radii come from
/// ring(). Sites are addressed by packed row-major indices over the bounding
/// rectangle; hot loops work on indices and touch coordinates only at edges.
class Region {
public:
    enum class Kind { box, rect, ring };

    static Region box(std::int32_t n);
    static Region rect(std::int32_t x0, std::int32_t x1, std::int32_t y0, std::int32_t y1);
    static Region ring(std::int32_t inner, std::int32_t outer);
    static Region annulus(std::int32_t i);

    Kind kind() const { return kind_; }
    std::int32_t x0() const { return x0_; }
    std::int32_t x1() const { return x1_; }
    std::int32_t y0() const { return y0_; }
    std::int32_t y1() const { return y1_; }
    /// inner hole radius for rings, 0 otherwise
    std::int32_t inner_radius() const { return inner_; }
    /// outer L-inf radius for boxes and rings
    std::int32_t outer_radius() const { return x1_; }
    /// i for annulus(i), -1 otherwise
    std::int32_t annulus_index() const { return annulus_i_; }

    std::int32_t width() const { return x1_ - x0_ + 1; }
    std::int32_t height() const { return y1_ - y0_ + 1; }
    std::int64_t bounding_count() const { return std::int64_t(width()) * height(); }
    std::int64_t site_count() const;

    bool in_bounding(Site v) const {
        return v.x >= x0_ && v.x <= x1_ && v.y >= y0_ && v.y <= y1_;
    }
    bool contains(Site v) const {
        return in_bounding(v) && (kind_ != Kind::ring || linf(v) > inner_);
    }

    /// packed row-major index in the bounding rectangle (no containment check)
    std::int32_t index_of(Site v) const {
        return (v.y - y0_) * width() + (v.x - x0_);
    }
    Site site_of(std::int32_t idx) const {
        const std::int32_t w = width();
        return Site{x0_ + idx % w, y0_ + idx / w};
    }
    bool contains_index(std::int32_t idx) const {
        return idx >= 0 && idx < bounding_count() &&
               (kind_ != Kind::ring || linf(site_of(idx)) > inner_);
    }

    /// all region sites in row-major order
    std::vector<Site> sites() const;

    std::string describe() const;

    friend bool operator==(const Region& a, const Region& b) {
        return a.kind_ == b.kind_ && a.x0_ == b.x0_ && a.x1_ == b.x1_ &&
               a.y0_ == b.y0_ && a.y1_ == b.y1_ && a.inner_ == b.inner_;
    }

private:
    Kind kind_ = Kind::box;
    std::int32_t x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0;
    std::int32_t inner_ = 0;
    std::int32_t annulus_i_ = -1;
};

/// Adjacent sites of v inside the region, in the fixed compass order.
/// Throws std::domain_error when v is not a region site.
std::vector<Site> neighbors(Site v, Adjacency adj, const Region& region);

/// boundary(region).sites: exactly the region sites with a nearest neighbor
/// outside the region. For rings, inner_ring and outer_ring are the full site
/// circuits at L-inf radius inner+1 and outer; inner_ring keeps the four
/// corner sites (which have no nearest neighbor in the hole) so that both are
/// genuine nearest-neighbor circuits around the origin.
struct Boundary {
    std::vector<Site> sites;
    std::vector<Site> inner_ring;
    std::vector<Site> outer_ring;
};
Boundary boundary(const Region& region);

}  // namespace pyro
