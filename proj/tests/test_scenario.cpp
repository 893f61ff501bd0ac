#include "doctest.h"

#include <string>

#include "lorentz/scenario.hpp"

using namespace lorentz;

TEST_CASE("built-in default scenario loads and validates") {
    Scenario s = Scenario::builtin_default();
    CHECK(s.backend == Backend::euclidean(2));
    CHECK(s.events.count("E1") == 1);
    CHECK(s.diamonds.count("D1") == 1);
    CHECK(s.diamonds.at("D2").bottom.t == 4.0);
    CHECK(s.sets.at("A").points.size() == 2);
    CHECK(s.sets.at("S1").is_event_set());
    CHECK(s.intervals.at("I1").lo == -1.0);
    CHECK(s.audit.samples == 10000);
}

TEST_CASE("round trip serialization is byte identical") {
    Scenario s = Scenario::builtin_default();
    std::string once = s.to_json_text();
    Scenario again = Scenario::from_json_text(once);
    std::string twice = again.to_json_text();
    CHECK(once == twice);
}

TEST_CASE("malformed scenarios carry field diagnostics") {
    CHECK_THROWS_WITH_AS(Scenario::from_json_text("{}"),
                         "scenario.: missing field 'backend'", ScenarioError);

    const char* bad_event = R"({"backend": {"kind": "euclidean", "dim": 2},
                                "events": {"E": {"t": "zero", "x": [0, 0]}}})";
    CHECK_THROWS_AS(Scenario::from_json_text(bad_event), ScenarioError);

    const char* bad_diamond = R"({"backend": {"kind": "euclidean", "dim": 2},
        "diamonds": {"D": {"bottom": {"t": 1.0, "x": [0, 0]}, "top": {"t": 0.0, "x": [0, 0]}}}})";
    try {
        Scenario::from_json_text(bad_diamond);
        FAIL("expected a diagnostic");
    } catch (const ScenarioError& e) {
        CHECK(std::string(e.what()).find("diamonds.D") != std::string::npos);
    }

    const char* bad_dim = R"({"backend": {"kind": "euclidean", "dim": 2},
                              "events": {"E": {"t": 0.0, "x": [0]}}})";
    CHECK_THROWS_AS(Scenario::from_json_text(bad_dim), ScenarioError);

    CHECK_THROWS_AS(Scenario::from_json_text("not json at all"), ScenarioError);
}

TEST_CASE("circle backend scenarios") {
    const char* text = R"({
        "backend": {"kind": "circle", "circumference": 10.0},
        "events": {"E": {"t": 0.0, "x": [9.5]}},
        "sets": {"C": {"points": [[1.0], [9.0]]}}
    })";
    Scenario s = Scenario::from_json_text(text);
    CHECK(s.backend == Backend::circle(10.0));
    CHECK(s.sets.at("C").points.size() == 2);

    const char* off = R"({
        "backend": {"kind": "circle", "circumference": 10.0},
        "events": {"E": {"t": 0.0, "x": [10.0]}}
    })";
    CHECK_THROWS_AS(Scenario::from_json_text(off), ScenarioError);  // arc position out of range
}

TEST_CASE("custom table model parses") {
    const char* text = R"({
        "backend": {"kind": "euclidean", "dim": 2},
        "audit": {
            "samples": 100,
            "custom_model": {
                "name": "two-chain",
                "dist":   [[0, 1], [1, 0]],
                "chron":  [[0, 1], [0, 0]],
                "causal": [[1, 1], [0, 1]],
                "tau":    [[0, 1], [0, 0]]
            }
        }
    })";
    Scenario s = Scenario::from_json_text(text);
    REQUIRE(s.audit.custom_model.has_value());
    CHECK(s.audit.custom_model->size() == 2);
    CHECK(s.audit.custom_model->chron(0, 1));
    CHECK_FALSE(s.audit.custom_model->chron(1, 0));
    CHECK(s.audit.custom_model->tau(0, 1).value() == 1.0);
}
