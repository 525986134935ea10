#include "pyro/seeds.hpp"

#include <stdexcept>

#include "pyro/clock_stream.hpp"

namespace pyro {

std::uint64_t replica_seed(std::uint64_t master, std::int64_t index) {
    if (index < 0) throw std::invalid_argument("replica_seed: index must be >= 0");
    // mix64 is a bijection and 0x9e.. is odd, so for a fixed master the map
    // index -> seed is injective: no collisions within a run, ever
    return mix64(master ^ mix64(0x9e3779b97f4a7c15ULL * (std::uint64_t(index) + 1)));
}

std::vector<std::uint64_t> replica_seeds(std::uint64_t master, std::int64_t count) {
    if (count < 1) throw std::invalid_argument("replica_seeds: count must be >= 1");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out[std::size_t(i)] = replica_seed(master, i);
    return out;
}

}  // namespace pyro
