#include "pyro/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pyro/cluster_index.hpp"
#include "pyro/dynamics.hpp"
#include "pyro/experiments.hpp"
#include "pyro/manifest.hpp"
#include "pyro/pool.hpp"
#include "pyro/seeds.hpp"
#include "pyro/stats.hpp"
#include "pyro/tree.hpp"
#include "reference.hpp"

namespace pyro {

std::vector<double> parse_sweep(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        char extra = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &extra) != 3 ||
            step <= 0)
            throw std::invalid_argument("bad range: " + text);
        for (double v = start; v <= stop + 1e-9; v += step) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad number: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty sweep: " + text);
    return out;
}

std::vector<std::int64_t> parse_int_sweep(const std::string& text) {
    std::vector<std::int64_t> out;
    for (double v : parse_sweep(text)) {
        const std::int64_t i = std::int64_t(std::llround(v));
        if (std::fabs(v - double(i)) > 1e-9)
            throw std::invalid_argument("expected integers: " + text);
        out.push_back(i);
    }
    return out;
}

namespace {

struct CommonOpts {
    std::uint64_t seed = 1;
    std::int64_t replicas = 1000;
    double pc = default_p_c;
    double tc = -1.0;  // optional override
    std::string out;
    std::string format = "csv";
    int workers = default_workers();

    void resolve_constants() {
        if (tc >= 0.0) {
            const double implied_pc = -std::expm1(-tc);
            if (pc != default_p_c && std::fabs(pc - implied_pc) > 1e-9)
                throw std::invalid_argument("--pc and --tc are inconsistent");
            pc = implied_pc;
        }
        if (!(pc > 0.0 && pc < 1.0)) throw std::invalid_argument("--pc must lie in (0,1)");
    }
    double t_c() const { return critical_time(pc); }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_replicas = true) {
    cmd->add_option("--seed", o.seed, "master seed");
    if (with_replicas) cmd->add_option("--replicas", o.replicas, "replicas per point");
    cmd->add_option("--pc", o.pc, "site-percolation threshold estimate");
    cmd->add_option("--tc", o.tc, "critical time (implies --pc)");
    cmd->add_option("--out", o.out, "output path, '-' for stdout");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", o.workers, "worker threads (env PYRO_WORKERS)");
}

std::string cell(double v) { return format_double(v); }
std::string cell(std::int64_t v) { return std::to_string(v); }
std::string cell(std::uint64_t v) { return std::to_string(v); }
std::string cell(std::int32_t v) { return std::to_string(v); }

class TableWriter {
public:
    TableWriter(std::string experiment, const CommonOpts& opts, nlohmann::json params,
                std::string default_out)
        : opts_(opts), started_(std::chrono::steady_clock::now()) {
        manifest_.experiment = std::move(experiment);
        manifest_.params = std::move(params);
        manifest_.master_seed = opts.seed;
        manifest_.p_c = opts.pc;
        manifest_.t_c = opts.t_c();
        manifest_.started_utc = utc_now();
        out_path_ = opts.out.empty() ? std::move(default_out) : opts.out;
    }

    void columns(std::vector<std::string> names) { columns_ = std::move(names); }
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    int finish() {
        std::string body;
        if (opts_.format == "csv") {
            body = "# manifest_hash=" + manifest_.core_hash_hex() + "\n";
            body += join(columns_) + "\n";
            for (const auto& r : rows_) body += join(r) + "\n";
        } else {
            nlohmann::json j;
            j["manifest_hash"] = manifest_.core_hash_hex();
            j["columns"] = columns_;
            j["rows"] = rows_;
            body = j.dump() + "\n";
        }
        if (out_path_ == "-") {
            std::cout << body;
            return 0;
        }
        std::ofstream os(out_path_, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + out_path_);
        os << body;
        if (!os) throw std::runtime_error("write failed: " + out_path_);
        os.close();
        manifest_.outputs.push_back(out_path_);
        manifest_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started_)
                .count();
        manifest_.write(out_path_ + ".manifest.json");
        return 0;
    }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += ',';
            s += cells[i];
        }
        return s;
    }

    CommonOpts opts_;
    RunManifest manifest_;
    std::string out_path_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
    std::chrono::steady_clock::time_point started_;
};

// ---------------------------------------------------------------- simulate

int cmd_simulate(const CommonOpts& opts, const std::string& model, std::int64_t n,
                 double lambda, std::int64_t L, double horizon) {
    const bool has_lambda = lambda >= 0.0;
    const bool has_L = L >= 0;
    if (has_lambda && has_L)
        throw std::invalid_argument("give either --lambda or --L, not both");

    EventLog log;
    if (model == "zeta") {
        if (!has_lambda) throw std::invalid_argument("zeta needs --lambda");
        TreeConfig cfg;
        cfg.generations = std::int32_t(n);
        cfg.lambda = lambda;
        cfg.horizon = horizon;
        cfg.seed = opts.seed;
        log = run_zeta(cfg);
    } else if (model == "eta_L" || (model.empty() && has_L)) {
        if (!has_L) throw std::invalid_argument("eta_L needs --L");
        TrajectoryConfig cfg =
            TrajectoryConfig::eta_threshold(Region::box(std::int32_t(n)), L, horizon,
                                            opts.seed);
        cfg.p_c = opts.pc;
        cfg.validate();
        log = run_eta_L(cfg);
    } else if (model == "eta" || model.empty()) {
        if (!has_lambda) throw std::invalid_argument("eta needs --lambda");
        TrajectoryConfig cfg =
            TrajectoryConfig::eta(Region::box(std::int32_t(n)), lambda, horizon, opts.seed);
        cfg.p_c = opts.pc;
        cfg.validate();
        log = run_eta(cfg);
    } else {
        throw std::invalid_argument("unknown model: " + model);
    }

    const std::string path = opts.out.empty() ? "trajectory.csv" : opts.out;
    RunManifest manifest;
    manifest.experiment = "simulate";
    manifest.params = nlohmann::json::parse(log.header().to_json());
    manifest.master_seed = opts.seed;
    manifest.p_c = opts.pc;
    manifest.t_c = opts.t_c();
    manifest.started_utc = utc_now();

    std::ostringstream raw;
    std::string body;
    if (opts.format == "csv") {
        log.write_csv(raw);
        body = "# manifest_hash=" + manifest.core_hash_hex() + "\n" + raw.str();
    } else {
        log.write_json(raw);
        body = raw.str();
        body.insert(1, "\"manifest_hash\":\"" + manifest.core_hash_hex() + "\",");
    }
    if (path == "-") {
        std::cout << body;
        return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << body;
    if (!os) throw std::runtime_error("write failed: " + path);
    os.close();
    manifest.outputs.push_back(path);
    manifest.write(path + ".manifest.json");
    return 0;
}

// --------------------------------------------------------------- delta-scan

int cmd_delta_scan(const CommonOpts& opts, const std::string& n_list,
                   const std::string& delta_list, bool horizontal) {
    const auto ns = parse_int_sweep(n_list);
    const auto deltas = parse_sweep(delta_list);
    nlohmann::json params{{"n", n_list}, {"delta", delta_list},
                          {"replicas", opts.replicas}, {"horizontal", horizontal}};
    TableWriter table("delta-scan", opts, params, "delta_scan.csv");
    table.columns({"n", "delta", "estimate", "lo", "hi", "replicas", "seed"});
    for (std::int64_t n : ns) {
        for (double delta : deltas) {
            DeltaExperimentConfig cfg;
            cfg.n = std::int32_t(n);
            cfg.delta = delta;
            cfg.p_c = opts.pc;
            cfg.replicas = opts.replicas;
            cfg.seed = opts.seed;
            cfg.horizontal = horizontal;
            const Estimate e = estimate_p_n(cfg, opts.workers);
            table.row({cell(std::int64_t(n)), cell(delta), cell(e.point), cell(e.lo),
                       cell(e.hi), cell(e.trials), cell(e.seed)});
        }
    }
    return table.finish();
}

// --------------------------------------------------------------- fire-stats

int cmd_fire_stats(const CommonOpts& opts, const std::string& model, std::int64_t n,
                   std::int64_t m, const std::string& lambda_list, const std::string& L_list,
                   double t) {
    if (!lambda_list.empty() && !L_list.empty())
        throw std::invalid_argument("give either --lambda or --L, not both");
    nlohmann::json params{{"model", model}, {"n", n},          {"m", m},
                          {"lambda", lambda_list}, {"L", L_list}, {"t", t},
                          {"replicas", opts.replicas}};
    TableWriter table("fire-stats", opts, params, "fire_stats.csv");
    table.columns({"model", "n", "m", "lambda", "L", "t", "p_ge1", "p_ge1_lo", "p_ge1_hi",
                   "p_ge2", "p_ge2_lo", "p_ge2_hi", "tau_count", "tau_mean", "tau_min",
                   "tau_median", "tau_max", "replicas", "seed"});

    auto run_point = [&](double lambda, std::int64_t L) {
        FireStatConfig cfg;
        cfg.model = model == "eta_L" ? ModelKind::eta_L
                    : model == "zeta" ? ModelKind::zeta
                                      : ModelKind::eta;
        if (model != "eta" && model != "eta_L" && model != "zeta")
            throw std::invalid_argument("unknown model: " + model);
        cfg.n = std::int32_t(n);
        cfg.m = std::int32_t(m);
        cfg.lambda = lambda;
        cfg.size_threshold = L;
        cfg.t = t;
        cfg.replicas = opts.replicas;
        cfg.seed = opts.seed;
        cfg.p_c = opts.pc;
        const FireStats fs = fire_stats(cfg, opts.workers);
        const auto& taus = fs.tau_samples;
        table.row({model, cell(n), cell(m), cell(lambda), cell(L), cell(t),
                   cell(fs.at_least_one.point), cell(fs.at_least_one.lo),
                   cell(fs.at_least_one.hi), cell(fs.at_least_two.point),
                   cell(fs.at_least_two.lo), cell(fs.at_least_two.hi),
                   cell(std::int64_t(taus.size())), cell(mean(taus)),
                   cell(taus.empty() ? std::nan("") : *std::min_element(taus.begin(), taus.end())),
                   cell(quantile(taus, 0.5)),
                   cell(taus.empty() ? std::nan("") : *std::max_element(taus.begin(), taus.end())),
                   cell(opts.replicas), cell(opts.seed)});
    };

    if (!L_list.empty())
        for (std::int64_t L : parse_int_sweep(L_list)) run_point(-1.0, L);
    else if (!lambda_list.empty())
        for (double lambda : parse_sweep(lambda_list)) run_point(lambda, -1);
    else
        throw std::invalid_argument("fire-stats needs --lambda or --L");
    return table.finish();
}

// -------------------------------------------------------------- bound-check

int cmd_bound_check(const CommonOpts& opts, std::int64_t n, double lambda,
                    const std::string& t_list) {
    nlohmann::json params{{"n", n}, {"lambda", lambda}, {"t", t_list},
                          {"replicas", opts.replicas}};
    TableWriter table("bound-check", opts, params, "bound_check.csv");
    table.columns({"n", "lambda", "t", "lhs", "rhs", "lhs_se", "rhs_se", "diff_se",
                   "origin_burns", "necessary_violations", "holds", "replicas", "seed"});
    for (double t : parse_sweep(t_list)) {
        FireStatConfig cfg;
        cfg.model = ModelKind::eta;
        cfg.n = std::int32_t(n);
        cfg.m = 0;
        cfg.lambda = lambda;
        cfg.t = t;
        cfg.replicas = opts.replicas;
        cfg.seed = opts.seed;
        cfg.p_c = opts.pc;
        const BoundCheck bc = bound_check(cfg, opts.workers);
        table.row({cell(n), cell(lambda), cell(t), cell(bc.lhs), cell(bc.rhs),
                   cell(bc.lhs_se), cell(bc.rhs_se), cell(bc.diff_se),
                   cell(bc.origin_burns), cell(bc.necessary_violations),
                   bc.holds ? "1" : "0", cell(bc.replicas), cell(opts.seed)});
    }
    return table.finish();
}

// ----------------------------------------------------------------- xi-probe

int cmd_xi_probe(const CommonOpts& opts, std::int64_t i, const std::string& eps_list) {
    nlohmann::json params{{"i", i}, {"eps", eps_list}, {"replicas", opts.replicas}};
    TableWriter table("xi-probe", opts, params, "xi_probe.csv");
    table.columns({"i", "eps", "estimate", "lo", "hi", "replicas", "seed"});
    for (double eps : parse_sweep(eps_list)) {
        const Estimate e = xi_crossing_probe(std::int32_t(i), eps, opts.replicas, opts.seed,
                                             opts.pc, opts.workers);
        table.row({cell(i), cell(eps), cell(e.point), cell(e.lo), cell(e.hi),
                   cell(e.trials), cell(e.seed)});
    }
    return table.finish();
}

// --------------------------------------------------------------- tree-stats

int cmd_tree_stats(const CommonOpts& opts, const std::string& n_list, double lambda,
                   const std::string& t_list) {
    const auto ns = parse_int_sweep(n_list);
    const auto ts = parse_sweep(t_list);
    const double horizon = *std::max_element(ts.begin(), ts.end());
    nlohmann::json params{{"n", n_list}, {"lambda", lambda}, {"t", t_list},
                          {"replicas", opts.replicas}};
    TableWriter table("tree-stats", opts, params, "tree_stats.csv");
    table.columns({"generations", "lambda", "t", "f_hat", "lo", "hi", "upper_bound",
                   "replicas", "seed"});
    for (std::int64_t n : ns) {
        std::vector<double> samples(std::size_t(opts.replicas));
        parallel_for(opts.replicas, opts.workers, [&](std::int64_t r) {
            TreeConfig cfg;
            cfg.generations = std::int32_t(n);
            cfg.lambda = lambda;
            cfg.horizon = horizon;
            cfg.seed = replica_seed(opts.seed, r);
            samples[std::size_t(r)] = first_root_burn(cfg);
        });
        for (double t : ts) {
            std::int64_t hits = 0;
            for (double s : samples) hits += s <= t ? 1 : 0;
            const Estimate e = Estimate::wilson(hits, opts.replicas, opts.seed);
            table.row({cell(n), cell(lambda), cell(t), cell(e.point), cell(e.lo), cell(e.hi),
                       cell(t > 0 ? root_burn_upper_bound(t) : 0.0), cell(e.trials),
                       cell(e.seed)});
        }
    }
    return table.finish();
}

// ----------------------------------------------------------------- selftest

int cmd_selftest(const CommonOpts& opts) {
    int failures = 0;
    auto report = [&](const char* name, bool ok, const std::string& detail) {
        std::printf("[%s] %s%s%s\n", ok ? "ok" : "FAIL", name, detail.empty() ? "" : ": ",
                    detail.c_str());
        if (!ok) ++failures;
    };

    // 1. circuit duality vs winding-search oracle
    {
        std::mt19937_64 rng(20240901);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const std::vector<std::pair<int, int>> rings{{1, 5}, {2, 8}, {3, 15}};
        const std::vector<double> densities{0.40, 0.55, 0.65};
        std::int64_t cases = 0, disagreements = 0;
        for (const auto& [inner, outer] : rings) {
            const Region ring = Region::ring(inner, outer);
            for (double p : densities) {
                for (int rep = 0; rep < 40; ++rep) {
                    Grid g(ring);
                    for (std::int32_t idx = 0; idx < ring.bounding_count(); ++idx)
                        if (ring.contains_index(idx) && unif(rng) < p) g.set_raw(idx, 1);
                    for (const auto& cluster :
                         clusters_in_region(g, ring, Adjacency::nearest_neighbor)) {
                        ++cases;
                        if (surrounds_origin(cluster, ring) !=
                            ref::winding_circuit_exists(cluster, ring,
                                                        Adjacency::nearest_neighbor))
                            ++disagreements;
                    }
                    ++cases;
                    std::vector<Site> vacant;
                    for (Site v : ring.sites())
                        if (!g.occupied(v)) vacant.push_back(v);
                    if (vacant_star_circuit(g, ring) !=
                        ref::winding_circuit_exists(vacant, ring, Adjacency::star))
                        ++disagreements;
                }
            }
        }
        report("duality vs winding-circuit oracle", disagreements == 0,
               std::to_string(cases) + " cases, " + std::to_string(disagreements) +
                   " disagreements");
    }

    // 2. epoch union-find vs set-of-sets oracle
    {
        const Region region = Region::box(6);
        ClusterIndex index(region);
        ref::NaiveUnionFind naive;
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> coord(-6, 6);
        bool ok = true;
        for (int step = 0; step < 3000 && ok; ++step) {
            const Site v{coord(rng), coord(rng)};
            const auto live = index.live_at(v);
            const auto nlive = naive.live_at(v);
            if ((live == 0) != (nlive == 0)) {
                ok = false;
                break;
            }
            if (live == 0) {
                index.insert(v);
                naive.insert(v);
            } else if (step % 3 == 0) {
                index.burn(live);
                naive.burn(nlive);
            } else {
                const Site w{coord(rng), coord(rng)};
                const auto lw = index.live_at(w);
                const auto nw = naive.live_at(w);
                if (lw != 0 && nw != 0) {
                    index.unite(live, lw);
                    naive.unite(nlive, nw);
                }
            }
            if (live != 0 && index.is_live(live)) {
                auto a = index.members(live);
                std::sort(a.begin(), a.end());
                if (a != naive.members(nlive) ||
                    index.size(live) != naive.size(nlive))
                    ok = false;
            }
        }
        report("epoch union-find vs naive partition", ok, "3000 scripted operations");
    }

    // 3. event loop vs fixed-step chain (Kolmogorov-Smirnov)
    {
        const Region region = Region::rect(-3, 3, -3, 3);
        const double lambda = 0.15, horizon = 4.0, dt = 2e-3;
        const std::int64_t reps = 2000;
        std::vector<double> exact(static_cast<std::size_t>(reps));
        std::vector<double> discrete(static_cast<std::size_t>(reps));
        parallel_for(reps, opts.workers, [&](std::int64_t r) {
            const EventLog log = run_eta(TrajectoryConfig::eta(
                region, lambda, horizon, replica_seed(opts.seed, r)));
            double first = std::numeric_limits<double>::infinity();
            for (const Event& e : log.events())
                if (e.type == EventType::burn && e.site == Site{0, 0}) {
                    first = e.time;
                    break;
                }
            exact[std::size_t(r)] = first;
        });
        parallel_for(reps, opts.workers, [&](std::int64_t r) {
            discrete[std::size_t(r)] = ref::discretized_first_origin_burn(
                region, lambda, dt, horizon, replica_seed(opts.seed ^ 0xabcdef, r));
        });
        const double d = ks_distance(exact, discrete);
        report("event loop vs discretized chain", d < 0.06,
               "KS distance " + format_double(d) + " (threshold 0.06)");
    }

    return failures == 0 ? 0 : 1;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"forest-fire simulation and measurement toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* sim = app.add_subcommand("simulate", "run one trajectory and write its event log");
    std::string sim_model;
    std::int64_t sim_n = 8;
    double sim_lambda = -1.0, sim_t = 1.0;
    std::int64_t sim_L = -1;
    sim->add_option("--model", sim_model, "eta | eta_L | zeta (default by flags)");
    sim->add_option("--n", sim_n, "box radius (generations for zeta)");
    sim->add_option("--lambda", sim_lambda, "ignition rate");
    sim->add_option("--L", sim_L, "cluster size threshold");
    sim->add_option("--t", sim_t, "horizon");
    add_common(sim, opts, false);

    auto* dscan = app.add_subcommand("delta-scan", "crossing probability surface over (n, delta)");
    std::string ds_n = "16", ds_delta = "0:1:0.25";
    bool ds_horizontal = false;
    dscan->add_option("--n", ds_n, "scale list, e.g. 16,32");
    dscan->add_option("--delta", ds_delta, "delta list or start:stop:step");
    dscan->add_flag("--horizontal", ds_horizontal, "cross the target the long way");
    add_common(dscan, opts);

    auto* fstats = app.add_subcommand("fire-stats", "fire counts and first-fire times in B(m)");
    std::string fs_model = "eta", fs_lambda, fs_L;
    std::int64_t fs_n = 32, fs_m = 4;
    double fs_t = 1.0;
    fstats->add_option("--model", fs_model, "eta | eta_L | zeta");
    fstats->add_option("--n", fs_n, "box radius (generations for zeta)");
    fstats->add_option("--m", fs_m, "observation radius");
    fstats->add_option("--lambda", fs_lambda, "ignition rate list");
    fstats->add_option("--L", fs_L, "threshold list");
    fstats->add_option("--t", fs_t, "horizon");
    add_common(fstats, opts);

    auto* bcheck = app.add_subcommand("bound-check", "one-sided fire-probability bound at the origin");
    std::int64_t bc_n = 64;
    double bc_lambda = 0.01;
    std::string bc_t = "0.5";
    bcheck->add_option("--n", bc_n, "box radius");
    bcheck->add_option("--lambda", bc_lambda, "ignition rate");
    bcheck->add_option("--t", bc_t, "horizon list");
    add_common(bcheck, opts);

    auto* xprobe = app.add_subcommand("xi-probe", "crossing probe of the removal-at-t_c process");
    std::int64_t xp_i = 2;
    std::string xp_eps = "0.05";
    xprobe->add_option("--i", xp_i, "annulus index (positive even)");
    xprobe->add_option("--eps", xp_eps, "time offsets past t_c");
    add_common(xprobe, opts);

    auto* tstats = app.add_subcommand("tree-stats", "root-burn probability curves on the directed tree");
    std::string ts_n = "8", ts_t = "0.8:1.6:0.2";
    double ts_lambda = 1e-3;
    tstats->add_option("--n", ts_n, "generation counts");
    tstats->add_option("--lambda", ts_lambda, "ignition rate");
    tstats->add_option("--t", ts_t, "evaluation times");
    add_common(tstats, opts);

    auto* self = app.add_subcommand("selftest", "run the oracle-equivalence suites");
    add_common(self, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        opts.resolve_constants();
        if (opts.replicas < 1) throw std::invalid_argument("--replicas must be >= 1");
        if (opts.workers < 1) throw std::invalid_argument("--workers must be >= 1");
        if (sim->parsed()) return cmd_simulate(opts, sim_model, sim_n, sim_lambda, sim_L, sim_t);
        if (dscan->parsed()) return cmd_delta_scan(opts, ds_n, ds_delta, ds_horizontal);
        if (fstats->parsed())
            return cmd_fire_stats(opts, fs_model, fs_n, fs_m, fs_lambda, fs_L, fs_t);
        if (bcheck->parsed()) return cmd_bound_check(opts, bc_n, bc_lambda, bc_t);
        if (xprobe->parsed()) return cmd_xi_probe(opts, xp_i, xp_eps);
        if (tstats->parsed()) return cmd_tree_stats(opts, ts_n, ts_lambda, ts_t);
        if (self->parsed()) return cmd_selftest(opts);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace pyro
