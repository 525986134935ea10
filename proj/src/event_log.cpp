#include "pyro/event_log.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "pyro/grid.hpp"

namespace pyro {

const char* to_string(EventType t) {
    switch (t) {
        case EventType::grow: return "grow";
        case EventType::ignite: return "ignite";
        case EventType::burn: return "burn";
    }
    return "?";
}

const char* to_string(ModelKind m) {
    switch (m) {
        case ModelKind::eta: return "eta";
        case ModelKind::eta_L: return "eta_L";
        case ModelKind::zeta: return "zeta";
    }
    return "?";
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string node_path(std::uint32_t node) {
    if (node == 0) return "0";
    std::string s;
    while (node) {
        s.push_back(char('0' + (node & 1)));
        node >>= 1;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

static nlohmann::json region_json(const Region& r) {
    nlohmann::json j;
    switch (r.kind()) {
        case Region::Kind::box:
            j["kind"] = "box";
            j["n"] = r.outer_radius();
            break;
        case Region::Kind::rect:
            j["kind"] = "rect";
            j["x0"] = r.x0();
            j["x1"] = r.x1();
            j["y0"] = r.y0();
            j["y1"] = r.y1();
            break;
        case Region::Kind::ring:
            j["kind"] = "ring";
            j["inner"] = r.inner_radius();
            j["outer"] = r.outer_radius();
            if (r.annulus_index() >= 0) j["annulus_i"] = r.annulus_index();
            break;
    }
    return j;
}

std::string LogHeader::to_json() const {
    nlohmann::json j;
    j["model"] = to_string(model);
    if (model == ModelKind::zeta) {
        j["generations"] = generations;
        j["columns"] = "time,node,type";
    } else {
        j["region"] = region_json(region);
        j["columns"] = "time,site_x,site_y,type";
    }
    if (model == ModelKind::eta_L)
        j["L"] = size_threshold;
    else
        j["lambda"] = lambda;
    j["t"] = horizon;
    j["seed"] = seed;
    if (p_c > 0.0) {
        j["p_c"] = p_c;
        j["t_c"] = -std::log1p(-p_c);
    }
    if (max_annulus_i >= 0) j["max_annulus_i"] = max_annulus_i;
    return j.dump();
}

void EventLog::write_csv(std::ostream& os) const {
    os << header_.to_json() << '\n';
    char buf[96];
    for (const Event& e : events_) {
        if (header_.model == ModelKind::zeta) {
            std::snprintf(buf, sizeof buf, "%.17g,%s,%s\n", e.time,
                          node_path(std::uint32_t(e.site.x)).c_str(), to_string(e.type));
        } else {
            std::snprintf(buf, sizeof buf, "%.17g,%d,%d,%s\n", e.time, e.site.x, e.site.y,
                          to_string(e.type));
        }
        os << buf;
    }
}

void EventLog::write_json(std::ostream& os) const {
    os << "{\"header\":" << header_.to_json() << ",\"events\":[";
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const Event& e = events_[i];
        if (i) os << ',';
        os << "[" << format_double(e.time) << ',';
        if (header_.model == ModelKind::zeta)
            os << '"' << node_path(std::uint32_t(e.site.x)) << '"';
        else
            os << e.site.x << ',' << e.site.y;
        os << ",\"" << to_string(e.type) << "\"]";
    }
    os << "]}\n";
}

namespace {

[[noreturn]] void fail(std::size_t i, const char* what) {
    throw std::logic_error("EventLog record " + std::to_string(i) + ": " + what);
}

void check_lattice(const LogHeader& h, const std::vector<Event>& ev) {
    Grid g(h.region);
    const bool threshold_model = h.model == ModelKind::eta_L;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        const Event& e = ev[i];
        if (i > 0 && e.time < ev[i - 1].time) fail(i, "time decreases");
        if (!h.region.contains(e.site)) fail(i, "site outside region");
        switch (e.type) {
            case EventType::grow: {
                if (g.occupied(e.site)) fail(i, "grow on occupied site");
                g.set(e.site, true);
                // threshold rule: burns follow immediately when the grown
                // cluster reached the threshold
                if (threshold_model) {
                    auto cluster = occupied_cluster(g, e.site, Adjacency::nearest_neighbor,
                                                    h.region);
                    const bool burns = i + 1 < ev.size() &&
                                       ev[i + 1].type == EventType::burn &&
                                       ev[i + 1].time == e.time;
                    if (std::int64_t(cluster.size()) >= h.size_threshold) {
                        if (!burns) fail(i, "threshold reached without burn block");
                        std::vector<Site> burned;
                        std::size_t j = i + 1;
                        for (; j < ev.size() && ev[j].type == EventType::burn &&
                               ev[j].time == e.time;
                             ++j)
                            burned.push_back(ev[j].site);
                        std::sort(burned.begin(), burned.end());
                        std::sort(cluster.begin(), cluster.end());
                        if (burned != cluster) fail(i, "burn block is not the grown cluster");
                    } else if (burns) {
                        fail(i, "burn block below threshold");
                    }
                }
                break;
            }
            case EventType::ignite: {
                if (threshold_model) fail(i, "ignite record in threshold model");
                if (g.occupied(e.site)) {
                    auto cluster = occupied_cluster(g, e.site, Adjacency::nearest_neighbor,
                                                    h.region);
                    std::vector<Site> burned;
                    std::size_t j = i + 1;
                    for (; j < ev.size() && ev[j].type == EventType::burn &&
                           ev[j].time == e.time;
                         ++j)
                        burned.push_back(ev[j].site);
                    std::sort(burned.begin(), burned.end());
                    std::sort(cluster.begin(), cluster.end());
                    if (burned != cluster)
                        fail(i, "burn block is not the ignited occupied cluster");
                } else if (i + 1 < ev.size() && ev[i + 1].type == EventType::burn &&
                           ev[i + 1].time == e.time) {
                    fail(i, "burn block after ignition of a vacant site");
                }
                break;
            }
            case EventType::burn: {
                if (!g.occupied(e.site)) fail(i, "burn on vacant site");
                const EventType starter =
                    threshold_model ? EventType::grow : EventType::ignite;
                if (i == 0 || ev[i - 1].time != e.time ||
                    (ev[i - 1].type != starter && ev[i - 1].type != EventType::burn))
                    fail(i, "burn without a triggering event");
                g.set(e.site, false);
                break;
            }
        }
    }
}

void check_tree(const LogHeader& h, const std::vector<Event>& ev) {
    const std::int64_t nodes = std::int64_t(1) << (h.generations + 1);
    std::vector<std::uint8_t> state(std::size_t(nodes), 0);  // 1-based, slot 0 unused
    auto node_of = [&](const Event& e, std::size_t i) {
        const std::int64_t v = e.site.x;
        if (v < 1 || v >= nodes) fail(i, "node outside tree");
        return std::uint32_t(v);
    };
    for (std::size_t i = 0; i < ev.size(); ++i) {
        const Event& e = ev[i];
        if (i > 0 && e.time < ev[i - 1].time) fail(i, "time decreases");
        const std::uint32_t v = node_of(e, i);
        switch (e.type) {
            case EventType::grow:
                if (state[v]) fail(i, "grow on occupied node");
                state[v] = 1;
                break;
            case EventType::ignite: {
                // burns = maximal occupied path from v toward the root
                std::vector<std::uint32_t> expected;
                for (std::uint32_t w = v; w >= 1 && state[w]; w >>= 1) {
                    expected.push_back(w);
                    if (w == 1) break;
                }
                std::size_t j = i + 1;
                for (std::uint32_t w : expected) {
                    if (j >= ev.size() || ev[j].type != EventType::burn ||
                        ev[j].time != e.time || node_of(ev[j], j) != w)
                        fail(i, "burn block is not the occupied path to the root");
                    ++j;
                }
                if (j < ev.size() && ev[j].type == EventType::burn && ev[j].time == e.time)
                    fail(i, "burn block longer than the occupied path");
                break;
            }
            case EventType::burn:
                if (!state[v]) fail(i, "burn on vacant node");
                if (i == 0 || ev[i - 1].time != e.time ||
                    (ev[i - 1].type != EventType::ignite && ev[i - 1].type != EventType::burn))
                    fail(i, "burn without a triggering ignition");
                state[v] = 0;
                break;
        }
    }
}

}  // namespace

void EventLog::check_well_formed() const {
    if (header_.model == ModelKind::zeta)
        check_tree(header_, events_);
    else
        check_lattice(header_, events_);
}

}  // namespace pyro
