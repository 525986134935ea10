#include "pyro/manifest.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace pyro {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

nlohmann::json RunManifest::core() const {
    nlohmann::json j;
    j["experiment"] = experiment;
    j["params"] = params;
    j["seed"] = master_seed;
    j["seed_rule"] = seed_rule;
    j["p_c"] = p_c;
    j["t_c"] = t_c;
    j["version"] = version;
    return j;
}

std::uint64_t RunManifest::core_hash() const { return fnv1a64(core().dump()); }

std::string RunManifest::core_hash_hex() const {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)core_hash());
    return buf;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j = core();
    j["core_hash"] = core_hash_hex();
    j["outputs"] = outputs;
    j["started_utc"] = started_utc;
    j["wall_seconds"] = wall_seconds;
    return j;
}

void RunManifest::write(const std::string& path) const {
    if (std::fabs(t_c + std::log1p(-p_c)) > 1e-12)
        throw std::logic_error("RunManifest: t_c is not -ln(1 - p_c)");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << to_json().dump(2) << '\n';
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace pyro
