#include "lorentz/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lorentz {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ScenarioError("scenario." + path + ": " + what);
}

const json& need(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

double need_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Point parse_point(const json& j, const Backend& backend, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a coordinate array");
    std::vector<double> coords;
    coords.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        coords.push_back(need_number(j[i], path + "[" + std::to_string(i) + "]"));
    Point p(std::move(coords));
    try {
        backend.require_point(p);
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    return p;
}

Event parse_event(const json& j, const Backend& backend, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object with fields t, x");
    Event e;
    e.t = need_number(need(j, "t", path), path + ".t");
    e.x = parse_point(need(j, "x", path), backend, path + ".x");
    return e;
}

Backend parse_backend(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    std::string kind = need(j, "kind", path).get<std::string>();
    if (kind == "euclidean" || kind == "taxicab") {
        auto dim = static_cast<std::size_t>(need_number(need(j, "dim", path), path + ".dim"));
        return kind == "euclidean" ? Backend::euclidean(dim) : Backend::taxicab(dim);
    }
    if (kind == "circle")
        return Backend::circle(
            need_number(need(j, "circumference", path), path + ".circumference"));
    fail(path + ".kind", "unknown backend kind '" + kind + "'");
}

template <class T>
std::vector<std::vector<T>> parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a matrix");
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        std::string rpath = path + "[" + std::to_string(i) + "]";
        if (!row.is_array()) fail(rpath, "expected a row");
        std::vector<T> r;
        for (std::size_t k = 0; k < row.size(); ++k)
            r.push_back(static_cast<T>(
                need_number(row[k], rpath + "[" + std::to_string(k) + "]")));
        out.push_back(std::move(r));
    }
    return out;
}

json point_to_json(const Point& p) {
    json a = json::array();
    for (double c : p.coords) a.push_back(c);
    return a;
}

json event_to_json(const Event& e) {
    json o;
    o["t"] = e.t;
    o["x"] = point_to_json(e.x);
    return o;
}

}  // namespace

Scenario Scenario::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario: JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ScenarioError("scenario: top level must be an object");

    Scenario s;
    s.backend = parse_backend(need(doc, "backend", ""), "backend");
    MinkowskiTaxi taxi(s.backend);

    if (auto it = doc.find("events"); it != doc.end()) {
        for (const auto& [name, val] : it->items())
            s.events.emplace(name, parse_event(val, s.backend, "events." + name));
    }
    if (auto it = doc.find("diamonds"); it != doc.end()) {
        for (const auto& [name, val] : it->items()) {
            std::string path = "diamonds." + name;
            Event bottom = parse_event(need(val, "bottom", path), s.backend, path + ".bottom");
            Event top = parse_event(need(val, "top", path), s.backend, path + ".top");
            try {
                s.diamonds.emplace(name, taxi.make_diamond(bottom, top));
            } catch (const std::exception& e) {
                fail(path, e.what());
            }
        }
    }
    if (auto it = doc.find("sets"); it != doc.end()) {
        for (const auto& [name, val] : it->items()) {
            std::string path = "sets." + name;
            SetEntry entry;
            bool has_points = val.contains("points");
            bool has_events = val.contains("events");
            if (has_points == has_events)
                fail(path, "needs exactly one of 'points' or 'events'");
            if (has_points) {
                const auto& arr = val["points"];
                if (!arr.is_array() || arr.empty()) fail(path + ".points", "nonempty array required");
                for (std::size_t i = 0; i < arr.size(); ++i)
                    entry.points.push_back(
                        parse_point(arr[i], s.backend, path + ".points[" + std::to_string(i) + "]"));
            } else {
                const auto& arr = val["events"];
                if (!arr.is_array() || arr.empty()) fail(path + ".events", "nonempty array required");
                for (std::size_t i = 0; i < arr.size(); ++i)
                    entry.events.push_back(
                        parse_event(arr[i], s.backend, path + ".events[" + std::to_string(i) + "]"));
            }
            s.sets.emplace(name, std::move(entry));
        }
    }
    if (auto it = doc.find("intervals"); it != doc.end()) {
        for (const auto& [name, val] : it->items()) {
            std::string path = "intervals." + name;
            Interval iv;
            iv.lo = need_number(need(val, "lo", path), path + ".lo");
            iv.hi = need_number(need(val, "hi", path), path + ".hi");
            if (iv.hi < iv.lo) fail(path, "hi must be >= lo");
            s.intervals.emplace(name, iv);
        }
    }
    if (auto it = doc.find("audit"); it != doc.end()) {
        const auto& a = *it;
        if (a.contains("samples"))
            s.audit.samples = static_cast<std::size_t>(need_number(a["samples"], "audit.samples"));
        if (a.contains("seed"))
            s.audit.seed = a["seed"].get<std::uint64_t>();
        if (a.contains("grid")) s.audit.grid = need_number(a["grid"], "audit.grid");
        if (a.contains("custom_model")) {
            const auto& cm = a["custom_model"];
            std::string path = "audit.custom_model";
            try {
                s.audit.custom_model = TableModel(
                    parse_matrix<double>(need(cm, "dist", path), path + ".dist"),
                    parse_matrix<int>(need(cm, "chron", path), path + ".chron"),
                    parse_matrix<int>(need(cm, "causal", path), path + ".causal"),
                    parse_matrix<double>(need(cm, "tau", path), path + ".tau"),
                    cm.contains("name") ? cm["name"].get<std::string>() : "table");
            } catch (const ScenarioError&) {
                throw;
            } catch (const std::exception& e) {
                fail(path, e.what());
            }
        }
    }
    return s;
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::string Scenario::to_json_text() const {
    json doc;
    json b;
    switch (backend.kind()) {
        case Backend::Kind::euclidean:
            b["kind"] = "euclidean";
            b["dim"] = backend.dim();
            break;
        case Backend::Kind::taxicab:
            b["kind"] = "taxicab";
            b["dim"] = backend.dim();
            break;
        case Backend::Kind::circle:
            b["kind"] = "circle";
            b["circumference"] = backend.circumference();
            break;
    }
    doc["backend"] = std::move(b);

    json events = json::object();
    for (const auto& [name, e] : this->events) events[name] = event_to_json(e);
    doc["events"] = std::move(events);

    json diamonds = json::object();
    for (const auto& [name, d] : this->diamonds) {
        json o;
        o["bottom"] = event_to_json(d.bottom);
        o["top"] = event_to_json(d.top);
        diamonds[name] = std::move(o);
    }
    doc["diamonds"] = std::move(diamonds);

    json sets = json::object();
    for (const auto& [name, entry] : this->sets) {
        json o;
        if (entry.is_event_set()) {
            json arr = json::array();
            for (const auto& e : entry.events) arr.push_back(event_to_json(e));
            o["events"] = std::move(arr);
        } else {
            json arr = json::array();
            for (const auto& p : entry.points) arr.push_back(point_to_json(p));
            o["points"] = std::move(arr);
        }
        sets[name] = std::move(o);
    }
    doc["sets"] = std::move(sets);

    json intervals = json::object();
    for (const auto& [name, iv] : this->intervals) {
        json o;
        o["lo"] = iv.lo;
        o["hi"] = iv.hi;
        intervals[name] = std::move(o);
    }
    doc["intervals"] = std::move(intervals);

    json a;
    a["samples"] = audit.samples;
    a["seed"] = audit.seed;
    a["grid"] = audit.grid;
    doc["audit"] = std::move(a);

    return doc.dump(2) + "\n";
}

void Scenario::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ScenarioError("scenario: cannot write '" + path + "'");
    out << to_json_text();
}

const char* Scenario::builtin_default_text() {
    // Keep in sync with scenarios/default.json (the shipped copy is the
    // canonical serialization of this document).
    return R"JSON({
  "backend": {"kind": "euclidean", "dim": 2},
  "events": {
    "E1": {"t": 0.0, "x": [0.0, 0.0]},
    "E2": {"t": 7.0, "x": [3.0, 4.0]},
    "E3": {"t": 5.0, "x": [3.0, 4.0]}
  },
  "diamonds": {
    "D1": {"bottom": {"t": 0.0, "x": [0.0, 0.0]}, "top": {"t": 10.0, "x": [0.0, 0.0]}},
    "D2": {"bottom": {"t": 4.0, "x": [1.0, 0.0]}, "top": {"t": 16.0, "x": [2.0, 0.0]}}
  },
  "sets": {
    "A": {"points": [[0.0, 0.0], [4.0, 0.0]]},
    "B": {"points": [[2.0, 0.0]]},
    "S1": {"events": [{"t": 1.0, "x": [0.0, 0.0]}, {"t": 2.0, "x": [0.0, 0.0]}]},
    "S2": {"events": [{"t": 5.0, "x": [0.0, 0.0]}]}
  },
  "intervals": {
    "I1": {"lo": -1.0, "hi": 1.0},
    "I2": {"lo": 4.0, "hi": 6.0}
  },
  "audit": {"samples": 10000, "seed": 0, "grid": 0.05}
})JSON";
}

Scenario Scenario::builtin_default() { return from_json_text(builtin_default_text()); }

}  // namespace lorentz
