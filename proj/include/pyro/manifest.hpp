#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pyro {

inline constexpr const char* project_version = "0.1.0";

std::uint64_t fnv1a64(std::string_view s);

/// Everything needed to reproduce a run bit-exactly, plus bookkeeping. The
/// core (experiment, parameters, seed, constants, version) hashes to a stable
/// id that output files embed; wall-clock metadata stays out of the hash so
/// reruns produce byte-identical outputs.
struct RunManifest {
    std::string experiment;
    nlohmann::json params;
    std::uint64_t master_seed = 0;
    std::string seed_rule = "mix64(master ^ mix64(0x9e3779b97f4a7c15 * (index + 1)))";
    double p_c = 0.0;
    double t_c = 0.0;  // always -ln(1 - p_c)
    std::string version = project_version;
    std::vector<std::string> outputs;
    std::string started_utc;
    double wall_seconds = 0.0;

    nlohmann::json core() const;
    std::uint64_t core_hash() const;
    std::string core_hash_hex() const;
    nlohmann::json to_json() const;
    /// writes to path; throws std::runtime_error on I/O failure
    void write(const std::string& path) const;
};

std::string utc_now();

}  // namespace pyro
