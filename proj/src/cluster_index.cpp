#include "pyro/cluster_index.hpp"

#include <algorithm>

namespace pyro {

ClusterIndex::ClusterIndex(const Region& region)
    : region_(region), live_slot_(std::size_t(region.bounding_count()), npos) {}

std::uint32_t ClusterIndex::slot_checked(Handle h) const {
    if (h < id_base_ || h >= next_id_)
        throw std::logic_error("ClusterIndex: unknown or dead handle");
    const std::uint32_t s = slot_of_[std::size_t(h - id_base_)];
    if (s == npos) throw std::logic_error("ClusterIndex: dead handle");
    return s;
}

std::uint32_t ClusterIndex::root_slot(std::uint32_t s) {
    // path halving
    while (elems_[s].parent != s) {
        elems_[s].parent = elems_[elems_[s].parent].parent;
        s = elems_[s].parent;
    }
    return s;
}

ClusterIndex::Handle ClusterIndex::insert(Site v) {
    if (!region_.contains(v)) throw std::domain_error("ClusterIndex: site outside region");
    const std::uint32_t site_idx = std::uint32_t(region_.index_of(v));
    if (live_slot_[site_idx] != npos)
        throw std::logic_error("ClusterIndex: site already has a live epoch");
    if (dead_ >= 64 && dead_ > std::int64_t(elems_.size()) / 2) compact();

    const std::uint32_t s = std::uint32_t(elems_.size());
    Elem e;
    e.id = next_id_++;
    e.parent = s;
    e.next = s;  // singleton circular list
    e.site_index = site_idx;
    e.size = 1;
    e.rank = 0;
    elems_.push_back(e);
    slot_of_.push_back(s);
    live_slot_[site_idx] = s;
    ++live_;
    return e.id;
}

ClusterIndex::Handle ClusterIndex::find(Handle h) {
    return elems_[root_slot(slot_checked(h))].id;
}

ClusterIndex::Handle ClusterIndex::unite(Handle a, Handle b) {
    std::uint32_t ra = root_slot(slot_checked(a));
    std::uint32_t rb = root_slot(slot_checked(b));
    if (ra == rb) return elems_[ra].id;
    if (elems_[ra].rank < elems_[rb].rank) std::swap(ra, rb);
    elems_[rb].parent = ra;
    if (elems_[ra].rank == elems_[rb].rank) ++elems_[ra].rank;
    elems_[ra].size += elems_[rb].size;
    std::swap(elems_[ra].next, elems_[rb].next);  // splice the circular lists
    return elems_[ra].id;
}

std::int64_t ClusterIndex::size(Handle h) {
    return elems_[root_slot(slot_checked(h))].size;
}

std::vector<Site> ClusterIndex::members(Handle h) {
    const std::uint32_t root = root_slot(slot_checked(h));
    std::vector<Site> out;
    out.reserve(std::size_t(elems_[root].size));
    std::uint32_t s = root;
    do {
        out.push_back(region_.site_of(std::int32_t(elems_[s].site_index)));
        s = elems_[s].next;
    } while (s != root);
    return out;
}

void ClusterIndex::burn(Handle h) {
    const std::uint32_t root = root_slot(slot_checked(h));
    std::uint32_t s = root;
    std::int64_t n = 0;
    do {
        slot_of_[std::size_t(elems_[s].id - id_base_)] = npos;
        live_slot_[elems_[s].site_index] = npos;
        ++n;
        s = elems_[s].next;
    } while (s != root);
    live_ -= n;
    dead_ += n;
}

bool ClusterIndex::is_live(Handle h) const {
    return h >= id_base_ && h < next_id_ && slot_of_[std::size_t(h - id_base_)] != npos;
}

ClusterIndex::Handle ClusterIndex::live_at(Site v) const {
    if (!region_.contains(v)) throw std::domain_error("ClusterIndex: site outside region");
    const std::uint32_t s = live_slot_[std::size_t(region_.index_of(v))];
    return s == npos ? null_handle : elems_[s].id;
}

void ClusterIndex::compact() {
    std::vector<Elem> fresh;
    fresh.reserve(std::size_t(live_));
    std::vector<std::uint32_t> remap(elems_.size(), npos);
    std::uint64_t min_live = next_id_;
    for (std::uint32_t s = 0; s < std::uint32_t(elems_.size()); ++s) {
        const Elem& e = elems_[s];
        if (slot_of_[std::size_t(e.id - id_base_)] != s) continue;  // dead slot
        remap[s] = std::uint32_t(fresh.size());
        fresh.push_back(e);
        min_live = std::min(min_live, e.id);
    }
    for (Elem& e : fresh) {
        e.parent = remap[e.parent];
        e.next = remap[e.next];
    }
    const std::uint64_t base = min_live;
    std::vector<std::uint32_t> slots(std::size_t(next_id_ - base), npos);
    for (std::uint32_t s = 0; s < std::uint32_t(fresh.size()); ++s)
        slots[std::size_t(fresh[s].id - base)] = s;
    std::fill(live_slot_.begin(), live_slot_.end(), npos);
    for (std::uint32_t s = 0; s < std::uint32_t(fresh.size()); ++s)
        live_slot_[fresh[s].site_index] = s;
    elems_ = std::move(fresh);
    slot_of_ = std::move(slots);
    id_base_ = base;
    dead_ = 0;
    ++compactions_;
}

}  // namespace pyro
