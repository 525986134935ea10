#include "pyro/lattice.hpp"

#include <cstdio>

namespace pyro {

std::int32_t pow3(std::int32_t i) {
    std::int32_t p = 1;
    for (std::int32_t k = 0; k < i; ++k) p *= 3;
    return p;
}

Region Region::box(std::int32_t n) {
    if (n < 0) throw std::invalid_argument("Region::box: n must be >= 0");
    Region r;
    r.kind_ = Kind::box;
    r.x0_ = r.y0_ = -n;
    r.x1_ = r.y1_ = n;
    return r;
}

Region Region::rect(std::int32_t x0, std::int32_t x1, std::int32_t y0, std::int32_t y1) {
    if (x0 > x1 || y0 > y1) throw std::invalid_argument("Region::rect: empty rectangle");
    Region r;
    r.kind_ = Kind::rect;
    r.x0_ = x0;
    r.x1_ = x1;
    r.y0_ = y0;
    r.y1_ = y1;
    return r;
}

Region Region::ring(std::int32_t inner, std::int32_t outer) {
    if (inner < 0 || outer <= inner)
        throw std::invalid_argument("Region::ring: need 0 <= inner < outer");
    Region r;
    r.kind_ = Kind::ring;
    r.x0_ = r.y0_ = -outer;
    r.x1_ = r.y1_ = outer;
    r.inner_ = inner;
    return r;
}

Region Region::annulus(std::int32_t i) {
    if (i < 2 || i % 2 != 0)
        throw std::invalid_argument("Region::annulus: i must be a positive even integer");
    if (i > 18) throw std::invalid_argument("Region::annulus: radius overflows");
    Region r = ring(pow3(i), 5 * pow3(i));
    r.annulus_i_ = i;
    return r;
}

std::int64_t Region::site_count() const {
    if (kind_ != Kind::ring) return bounding_count();
    const std::int64_t hole = std::int64_t(2 * inner_ + 1) * (2 * inner_ + 1);
    return bounding_count() - hole;
}

std::vector<Site> Region::sites() const {
    std::vector<Site> out;
    out.reserve(std::size_t(site_count()));
    for (std::int32_t y = y0_; y <= y1_; ++y)
        for (std::int32_t x = x0_; x <= x1_; ++x) {
            const Site v{x, y};
            if (contains(v)) out.push_back(v);
        }
    return out;
}

std::string Region::describe() const {
    char buf[96];
    switch (kind_) {
        case Kind::box:
            std::snprintf(buf, sizeof buf, "box(%d)", x1_);
            break;
        case Kind::rect:
            std::snprintf(buf, sizeof buf, "rect(%d,%d,%d,%d)", x0_, x1_, y0_, y1_);
            break;
        case Kind::ring:
            if (annulus_i_ >= 0)
                std::snprintf(buf, sizeof buf, "annulus(%d)", annulus_i_);
            else
                std::snprintf(buf, sizeof buf, "ring(%d,%d)", inner_, x1_);
            break;
    }
    return buf;
}

std::vector<Site> neighbors(Site v, Adjacency adj, const Region& region) {
    if (!region.contains(v)) throw std::domain_error("neighbors: site outside region");
    std::vector<Site> out;
    out.reserve(std::size_t(degree(adj)));
    for (int i = 0; i < degree(adj); ++i) {
        const Site w{v.x + neighbor_steps[std::size_t(i)].x,
                     v.y + neighbor_steps[std::size_t(i)].y};
        if (region.contains(w)) out.push_back(w);
    }
    return out;
}

Boundary boundary(const Region& region) {
    if (region.site_count() <= 0) throw std::invalid_argument("boundary: empty region");
    Boundary b;
    for (Site v : region.sites()) {
        bool edge = false;
        for (int i = 0; i < 4; ++i) {
            const Site w{v.x + neighbor_steps[std::size_t(i)].x,
                         v.y + neighbor_steps[std::size_t(i)].y};
            if (!region.contains(w)) {
                edge = true;
                break;
            }
        }
        if (edge) b.sites.push_back(v);
        if (region.kind() == Region::Kind::ring) {
            const std::int32_t r = linf(v);
            if (r == region.inner_radius() + 1) b.inner_ring.push_back(v);
            if (r == region.outer_radius()) b.outer_ring.push_back(v);
        }
    }
    return b;
}

}  // namespace pyro
