#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "pyro/cli.hpp"
#include "pyro/dynamics.hpp"
#include "pyro/manifest.hpp"
#include "pyro/seeds.hpp"
#include "pyro/stats.hpp"

using namespace pyro;

namespace {

int dispatch(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"pyro"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli_dispatch(int(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("replica seeds are distinct, stable and prefix-consistent") {
    const auto ten = replica_seeds(7, 3);
    CHECK(ten.size() == 3);
    CHECK(ten[0] != ten[1]);
    CHECK(ten[1] != ten[2]);
    CHECK(ten[0] != ten[2]);
    CHECK(replica_seeds(7, 3) == ten);  // stable across calls

    const auto a = replica_seeds(123, 10);
    const auto b = replica_seeds(123, 100);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    // collision scan: one million derivations across four masters
    std::vector<std::uint64_t> all;
    all.reserve(1000000);
    for (std::uint64_t master : {1u, 2u, 999u, 123456789u})
        for (std::int64_t i = 0; i < 250000; ++i)
            all.push_back(replica_seed(master, i));
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

    CHECK_THROWS_AS(replica_seed(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(replica_seeds(1, 0), std::invalid_argument);
}

TEST_CASE("tally merging") {
    Tally a;
    a.point_key = "p1";
    a.successes = 3;
    a.trials = 10;
    a.tau_samples = {0.5, 0.7};
    a.seed = 1;
    Tally b;
    b.point_key = "p1";
    b.successes = 5;
    b.trials = 12;
    b.tau_samples = {0.2};
    b.seed = 1;

    const Tally ab = merge(a, b);
    CHECK(ab.successes == 8);
    CHECK(ab.trials == 22);
    CHECK(ab.tau_samples.size() == 3);

    // identity and commutativity
    CHECK(merge(a, Tally{}).successes == a.successes);
    CHECK(merge(Tally{}, a).trials == a.trials);
    const Tally ba = merge(b, a);
    CHECK(ba.successes == ab.successes);
    CHECK(ba.trials == ab.trials);

    // merged estimate equals the single-pass recompute
    const Estimate merged = to_estimate(ab);
    const Estimate direct = Estimate::wilson(8, 22, 1);
    CHECK(merged.point == direct.point);
    CHECK(merged.lo == direct.lo);
    CHECK(merged.hi == direct.hi);

    Tally c;
    c.point_key = "p2";
    c.trials = 1;
    CHECK_THROWS_AS(merge(a, c), std::invalid_argument);
}

TEST_CASE("Wilson intervals contain the point and stay inside [0,1]") {
    for (std::int64_t n : {1, 2, 7, 50, 10000}) {
        for (std::int64_t s = 0; s <= n; s += std::max<std::int64_t>(1, n / 7)) {
            const Estimate e = Estimate::wilson(s, n, 0);
            CHECK(e.lo >= 0.0);
            CHECK(e.hi <= 1.0);
            CHECK(e.lo <= e.point);
            CHECK(e.point <= e.hi);
        }
    }
    CHECK(Estimate::wilson(5, 5, 0).point == 1.0);
    CHECK_THROWS_AS(Estimate::wilson(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Estimate::wilson(3, 2, 0), std::invalid_argument);
}

TEST_CASE("sample statistics") {
    CHECK(mean({1.0, 2.0, 3.0}) == 2.0);
    CHECK(sample_sd({1.0, 1.0, 1.0}) == 0.0);
    CHECK(quantile({3.0, 1.0, 2.0}, 0.5) == 2.0);
    CHECK(quantile({1.0, 2.0}, 1.0) == 2.0);
    CHECK(ks_distance({1, 2, 3}, {1, 2, 3}) == 0.0);
    CHECK(ks_distance({1, 2}, {5, 6}) == 1.0);
    const double inf = std::numeric_limits<double>::infinity();
    // censored mass only shifts the plateau
    CHECK(ks_distance({1.0, inf}, {1.0, inf}) == 0.0);
    CHECK(ks_distance({1.0, inf, inf, inf}, {1.0, 1.5, inf, inf}) ==
          doctest::Approx(0.25));
}

TEST_CASE("sweep parsing") {
    CHECK(parse_sweep("0:0.2:0.05").size() == 5);
    CHECK(parse_sweep("1.5") == std::vector<double>{1.5});
    CHECK(parse_sweep("0.1,0.2,0.3").size() == 3);
    CHECK(parse_int_sweep("16,32") == std::vector<std::int64_t>{16, 32});
    CHECK(parse_int_sweep("2:6:2") == std::vector<std::int64_t>{2, 4, 6});
    CHECK_THROWS_AS(parse_sweep("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep("1:2:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_sweep("1.5,2"), std::invalid_argument);
}

TEST_CASE("manifest core hash ignores wall-clock metadata") {
    RunManifest m;
    m.experiment = "delta-scan";
    m.params = {{"n", "8"}};
    m.master_seed = 7;
    m.p_c = default_p_c;
    m.t_c = -std::log1p(-default_p_c);
    m.started_utc = "2020-01-01T00:00:00Z";
    m.wall_seconds = 1.0;
    const auto h1 = m.core_hash();
    m.started_utc = "2030-12-31T23:59:59Z";
    m.wall_seconds = 99.0;
    CHECK(m.core_hash() == h1);
    m.master_seed = 8;
    CHECK(m.core_hash() != h1);

    RunManifest bad = m;
    bad.t_c = 0.9;
    CHECK_THROWS_AS(bad.write("manifest_should_not_exist.json"), std::logic_error);
}

TEST_CASE("fnv1a64 reference vector") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") != fnv1a64("b"));
}

TEST_CASE("cli usage errors exit with code 2") {
    CHECK(dispatch({"no-such-command"}) == 2);
    CHECK(dispatch({}) == 2);
    CHECK(dispatch({"simulate", "--model", "eta", "--n", "2", "--lambda", "0.1", "--L",
                    "5", "--t", "1"}) == 2);
    CHECK(dispatch({"simulate", "--model", "eta", "--n", "2", "--t", "1"}) == 2);
    CHECK(dispatch({"delta-scan", "--n", "xyz"}) == 2);
    CHECK(dispatch({"fire-stats", "--model", "eta", "--n", "8", "--m", "9", "--lambda",
                    "0.1", "--t", "1", "--replicas", "10", "--out", "-"}) == 2);
    CHECK(dispatch({"delta-scan", "--n", "4", "--replicas", "0"}) == 2);
    CHECK(dispatch({"xi-probe", "--i", "2", "--eps", "0.1", "--pc", "0.5", "--tc",
                    "0.9", "--replicas", "1"}) == 2);
}

TEST_CASE("cli writes tables, manifests and identical reruns") {
    const std::string out = "harness_test_scan.csv";
    std::remove(out.c_str());
    std::remove((out + ".manifest.json").c_str());
    CHECK(dispatch({"delta-scan", "--n", "4", "--delta", "0,1", "--replicas", "50",
                    "--seed", "3", "--out", out.c_str(), "--workers", "2"}) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("# manifest_hash=") == 0);
    CHECK(body.find("n,delta,estimate,lo,hi,replicas,seed") != std::string::npos);
    const std::string manifest = slurp(out + ".manifest.json");
    CHECK(manifest.find("\"experiment\": \"delta-scan\"") != std::string::npos);
    // the table embeds the same hash the manifest carries
    const std::string hash = body.substr(16, 16);
    CHECK(manifest.find(hash) != std::string::npos);

    const std::string out2 = "harness_test_scan2.csv";
    CHECK(dispatch({"delta-scan", "--n", "4", "--delta", "0,1", "--replicas", "50",
                    "--seed", "3", "--out", out2.c_str(), "--workers", "1"}) == 0);
    CHECK(slurp(out2) == body);

    // simulate writes a parseable event log
    const std::string traj = "harness_test_traj.csv";
    CHECK(dispatch({"simulate", "--model", "eta", "--n", "3", "--lambda", "0.2", "--t",
                    "1.5", "--seed", "5", "--out", traj.c_str()}) == 0);
    const std::string log = slurp(traj);
    CHECK(log.find("\"model\":\"eta\"") != std::string::npos);
    CHECK(log.find("grow") != std::string::npos);
}

TEST_CASE("tc flag implies a consistent pc") {
    const std::string out = "harness_test_tc.csv";
    CHECK(dispatch({"xi-probe", "--i", "2", "--eps", "0.2", "--replicas", "2", "--tc",
                    "0.9", "--out", out.c_str()}) == 0);
    const auto manifest = nlohmann::json::parse(slurp(out + ".manifest.json"));
    CHECK(std::fabs(manifest["t_c"].get<double>() - 0.9) < 1e-12);
    CHECK(std::fabs(manifest["p_c"].get<double>() - (1.0 - std::exp(-0.9))) < 1e-12);
}
