#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "lorentz/minkowski_taxi.hpp"
#include "lorentz/sampling.hpp"

namespace lorentz::testing {

inline Event random_event(const Backend& backend, SplitMix64& rng, double tlo = -5.0,
                          double thi = 5.0) {
    return Event{rng.real(tlo, thi), sample_point(backend, rng)};
}

// Random causally related pair with optional extra slack on top of d(x, y).
inline std::pair<Event, Event> random_causal_pair(const MinkowskiTaxi& m, SplitMix64& rng,
                                                  double min_slack = 0.0, double max_slack = 3.0) {
    Event a = random_event(m.backend(), rng);
    Point target = sample_point(m.backend(), rng);
    double d = m.backend().dist(a.x, target);
    Event b{a.t + d + rng.real(min_slack, max_slack), target};
    return {a, b};
}

inline std::pair<Event, Event> random_chron_pair(const MinkowskiTaxi& m, SplitMix64& rng,
                                                 double min_slack = 0.5, double max_slack = 3.0) {
    return random_causal_pair(m, rng, min_slack, max_slack);
}

inline Diamond random_diamond(const MinkowskiTaxi& m, SplitMix64& rng, double max_slack = 3.0) {
    auto [a, b] = random_causal_pair(m, rng, 0.0, max_slack);
    return m.make_diamond(a, b);
}

// Causally related diamond pair: D2's vertices sit in the causal future of
// D1's matching vertices.
inline std::pair<Diamond, Diamond> random_causal_diamond_pair(const MinkowskiTaxi& m,
                                                              SplitMix64& rng,
                                                              double max_slack = 3.0) {
    Diamond d1 = random_diamond(m, rng, max_slack);
    Point bx = sample_point(m.backend(), rng);
    double db = m.backend().dist(d1.bottom.x, bx);
    Event bottom{d1.bottom.t + db + rng.real(0.0, max_slack), bx};
    Point tx = sample_point(m.backend(), rng);
    double dt = m.backend().dist(d1.top.x, tx);
    double base = std::max(d1.top.t + dt, bottom.t + m.backend().dist(bottom.x, tx));
    Event top{base + rng.real(0.0, max_slack), tx};
    return {d1, m.make_diamond(bottom, top)};
}

}  // namespace lorentz::testing
