#pragma once

#include <cstdint>
#include <vector>

namespace pyro {

/// Seed of the index-th replica. Pure function of (master, index), so the
/// assignment never depends on worker scheduling, prefixes are stable across
/// replica counts, and seeds within one master are provably pairwise distinct
/// (the derivation is a bijection of the index).
std::uint64_t replica_seed(std::uint64_t master, std::int64_t index);

std::vector<std::uint64_t> replica_seeds(std::uint64_t master, std::int64_t count);

}  // namespace pyro
