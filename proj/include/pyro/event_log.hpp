#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pyro/lattice.hpp"

namespace pyro {

enum class EventType : std::uint8_t { grow, ignite, burn };

/// eta: growth + rate-lambda ignition on a finite box.
/// eta_L: growth + instantaneous burning of clusters of size >= L.
/// zeta: the directed-binary-tree process.
enum class ModelKind : std::uint8_t { eta, eta_L, zeta };

const char* to_string(EventType t);
const char* to_string(ModelKind m);

struct Event {
    double time = 0.0;
    Site site;  // zeta: x holds the 1-based heap index of the node, y = 0
    EventType type = EventType::grow;

    friend bool operator==(const Event& a, const Event& b) {
        return a.time == b.time && a.site == b.site && a.type == b.type;
    }
};

struct LogHeader {
    ModelKind model = ModelKind::eta;
    Region region = Region::box(1);
    std::int32_t generations = -1;     // zeta only
    double lambda = 0.0;               // eta, zeta
    std::int64_t size_threshold = 0;   // eta_L only
    double horizon = 0.0;
    std::uint64_t seed = 0;
    double p_c = 0.0;
    std::int32_t max_annulus_i = -1;   // recorded when removal-at-t_c was involved

    std::string to_json() const;
};

/// shortest deterministic decimal form that round-trips a double
std::string format_double(double x);

/// bit-path string of a tree node: the binary digits of its 1-based heap
/// index ("1" = root, then one digit per left/right step)
std::string node_path(std::uint32_t node);

/// Time-ordered trajectory record. Grow records are 0->1 transitions only;
/// every ignition ring is recorded (a ring on a vacant site has no burn
/// block); an ignition of an occupied site is followed, at the same
/// timestamp, by the burn records of exactly its occupied cluster.
class EventLog {
public:
    EventLog() = default;
    explicit EventLog(LogHeader header) : header_(std::move(header)) {}

    const LogHeader& header() const { return header_; }
    const std::vector<Event>& events() const { return events_; }
    bool empty() const { return events_.empty(); }
    std::size_t size() const { return events_.size(); }

    void append(double time, Site site, EventType type) {
        events_.push_back(Event{time, site, type});
    }

    /// Replays the record against a fresh state and throws std::logic_error
    /// on any structural violation (decreasing times, grow on occupied, burn
    /// on vacant, burn block not matching the ignited cluster / threshold
    /// rule / root-path rule).
    void check_well_formed() const;

    /// JSON header line, then one `time,site_x,site_y,type` record per line
    /// (`time,node,type` with bit-path nodes for the tree model).
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

private:
    LogHeader header_;
    std::vector<Event> events_;
};

}  // namespace pyro
