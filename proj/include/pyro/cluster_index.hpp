#pragma once

#include <cstdint>
#include <vector>

#include "pyro/lattice.hpp"

namespace pyro {

/// Union-find over site occupation epochs. Union-find has no deletion, so
/// each time a site becomes occupied it gets a fresh element (an epoch);
/// burning a cluster retires all its elements in O(cluster size). Retired
/// storage is reclaimed by compaction once dead elements exceed half of
/// capacity. Member lists are circular and splice in O(1) on union, so a
/// cluster can be enumerated the moment it reaches a size threshold.
///
/// Handles are stable 64-bit epoch ids; 0 is the null handle. Operations on
/// dead or unknown handles throw std::logic_error.
class ClusterIndex {
public:
    using Handle = std::uint64_t;
    static constexpr Handle null_handle = 0;

    explicit ClusterIndex(const Region& region);

    /// fresh epoch for v; std::logic_error if v already has a live epoch
    Handle insert(Site v);
    /// representative handle of the containing cluster
    Handle find(Handle h);
    /// merge the clusters of a and b; returns the new representative
    Handle unite(Handle a, Handle b);
    /// live size of the containing cluster
    std::int64_t size(Handle h);
    /// sites of the containing cluster, in member-list order
    std::vector<Site> members(Handle h);
    /// retire every member of the containing cluster
    void burn(Handle h);

    bool is_live(Handle h) const;
    /// live epoch of v, or null_handle when v is vacant
    Handle live_at(Site v) const;

    std::int64_t live_count() const { return live_; }
    std::int64_t dead_count() const { return dead_; }
    std::int64_t capacity() const { return std::int64_t(elems_.size()); }
    std::int64_t compactions() const { return compactions_; }

private:
    struct Elem {
        std::uint64_t id = 0;
        std::uint32_t parent = 0;      // slot
        std::uint32_t next = 0;        // circular member list, slot
        std::uint32_t site_index = 0;  // packed region index
        std::int32_t size = 1;         // valid at roots
        std::uint8_t rank = 0;
    };

    static constexpr std::uint32_t npos = 0xffffffffu;

    Region region_;
    std::vector<Elem> elems_;
    std::vector<std::uint32_t> slot_of_;    // id - id_base_ -> slot, npos = dead
    std::vector<std::uint32_t> live_slot_;  // packed site index -> slot, npos = vacant
    std::uint64_t next_id_ = 1;
    std::uint64_t id_base_ = 1;
    std::int64_t live_ = 0;
    std::int64_t dead_ = 0;
    std::int64_t compactions_ = 0;

    std::uint32_t slot_checked(Handle h) const;
    std::uint32_t root_slot(std::uint32_t s);
    void compact();
};

}  // namespace pyro
