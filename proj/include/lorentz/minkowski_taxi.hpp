#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz/backend.hpp"
#include "lorentz/causal_model.hpp"
#include "lorentz/curve.hpp"
#include "lorentz/ext_real.hpp"

namespace lorentz {

// A point (t, x) of the taxicab product R^1_1 x_T X.
struct Event {
    double t = 0.0;
    Point x;

    friend bool operator==(const Event& a, const Event& b) { return a.t == b.t && a.x == b.x; }
    friend bool operator<(const Event& a, const Event& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.x < b.x;
    }
};

std::string to_string(const Event& e);

// A causal diamond J^+(bottom) n J^-(top); bottom <= top is the invariant,
// validated by make_diamond. Degenerate bottom == top is legal.
struct Diamond {
    Event bottom;
    Event top;

    friend bool operator==(const Diamond& a, const Diamond& b) {
        return a.bottom == b.bottom && a.top == b.top;
    }
};

std::string to_string(const Diamond& d);

// The specialization R^1_1 x_T X with closed forms:
//   (t,x) <=_T (s,y)  iff  s - t >= d(x, y)
//   (t,x) <<_T (s,y)  iff  s - t >  d(x, y)
//   d_T = |t - s| + d(x, y),   tau_T = s - t - d(x, y) on causal pairs.
// Agrees exactly with TaxicabProduct<RealLine> over the same backend.
class MinkowskiTaxi {
public:
    using element_type = Event;

    explicit MinkowskiTaxi(Backend backend) : backend_(std::move(backend)) {}

    const Backend& backend() const { return backend_; }

    double dist(const Event& a, const Event& b) const {
        double dt = a.t < b.t ? b.t - a.t : a.t - b.t;
        return dt + backend_.dist(a.x, b.x);
    }
    bool causal(const Event& a, const Event& b) const {
        return b.t - a.t >= backend_.dist(a.x, b.x);
    }
    bool chron(const Event& a, const Event& b) const {
        return b.t - a.t > backend_.dist(a.x, b.x);
    }
    ExtReal tau(const Event& a, const Event& b) const {
        double gap = b.t - a.t - backend_.dist(a.x, b.x);
        return gap >= 0.0 ? ExtReal(gap) : ExtReal(0.0);
    }

    // Point at fraction lam of the canonical maximal segment: time affine,
    // spatial coordinate moving along the backend geodesic at matching pace.
    Event interp(const Event& a, const Event& b, double lam) const;

    Diamond make_diamond(const Event& bottom, const Event& top) const;

    std::string describe(const Event& e) const { return to_string(e); }
    std::string label() const { return "R^1_1 x_T " + backend_.label(); }

    friend bool operator==(const MinkowskiTaxi& a, const MinkowskiTaxi& b) {
        return a.backend_ == b.backend_;
    }

private:
    Backend backend_;
};

// Explicit maximal curve between causally related events. Timelike pairs
// (tau = L > 0) are emitted on [0, L] with tau(l(u1), l(u2)) = u2 - u1;
// null pairs on [0, 1]. The d_T length is (s - t) + d(x, y) at any sampling.
SampledCurve<Event> maximal_segment(const MinkowskiTaxi& m, const Event& e1, const Event& e2,
                                    std::size_t steps);

// k pairwise-distinct causal staircases through the canonical spatial
// geodesic from e1.x to e2.x: monotone (t, sigma) breakpoints with
// dt >= dsigma per step, so every curve telescopes to tau-length tau(e1,e2).
// Requires a chron pair; seed-deterministic.
std::vector<SampledCurve<Event>> alt_maximal_curves(const MinkowskiTaxi& m, const Event& e1,
                                                    const Event& e2, std::size_t k,
                                                    std::uint64_t seed);

// One random causal staircase between a chron pair (helper shared with the
// generator above and with sampling in tests).
SampledCurve<Event> random_staircase(const MinkowskiTaxi& m, const Event& e1, const Event& e2,
                                     std::uint64_t seed);

bool diamond_membership(const MinkowskiTaxi& m, const Diamond& d, const Event& e);

// Grid sample of the diamond at spacing h in time and per spatial axis,
// filtered by membership; always contains both vertices.
std::vector<Event> diamond_sample(const MinkowskiTaxi& m, const Diamond& d, double h);

// Membership in Omega^r_(t,x) = I^+(t-r, x) n I^-(t+r, x).
bool localizing_membership(const MinkowskiTaxi& m, const Event& center, double r, const Event& q);

// Checks the non-imprisonment bound L_{d_T}(c) < 2r for a curve whose
// samples all lie in Omega^r_center; causal curves must never return false.
bool check_imprisonment_bound(const MinkowskiTaxi& m, const Event& center, double r,
                              const SampledCurve<Event>& c);

}  // namespace lorentz
