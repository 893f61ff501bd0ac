#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentz/backend.hpp"
#include "lorentz/minkowski_taxi.hpp"
#include "lorentz/table_model.hpp"

namespace lorentz {

// Scenario load/validation failure with a field diagnostic.
class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double center() const { return (lo + hi) / 2.0; }
    double radius() const { return (hi - lo) / 2.0; }
};

// Named set fixture: spatial points or events, depending on content.
struct SetEntry {
    std::vector<Point> points;
    std::vector<Event> events;

    bool is_event_set() const { return !events.empty(); }
};

struct AuditParams {
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double grid = 0.05;
    std::optional<TableModel> custom_model;
};

// A JSON-backed fixture document: one backend plus named events, diamonds,
// sets and intervals, and audit parameters. Everything is validated against
// the module invariants at load time.
struct Scenario {
    Backend backend = Backend::euclidean(2);
    std::map<std::string, Event> events;
    std::map<std::string, Diamond> diamonds;
    std::map<std::string, SetEntry> sets;
    std::map<std::string, Interval> intervals;
    AuditParams audit;

    static Scenario from_json_text(const std::string& text);
    static Scenario from_file(const std::string& path);

    // The built-in default fixture shipped as scenarios/default.json.
    static Scenario builtin_default();
    static const char* builtin_default_text();

    std::string to_json_text() const;
    void save(const std::string& path) const;
};

}  // namespace lorentz
