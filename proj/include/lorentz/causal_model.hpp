#pragma once

#include <algorithm>
#include <concepts>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "lorentz/curve.hpp"
#include "lorentz/ext_real.hpp"

namespace lorentz {

// A Lorentzian pre-length space over its element type: metric d, strict
// chronological relation, causal pre-order, and an extended-real time
// separation tau with tau > 0 exactly on chronologically related pairs.
template <class M>
concept causal_model = requires(const M& m, const typename M::element_type& a,
                                const typename M::element_type& b) {
    { m.dist(a, b) } -> std::convertible_to<double>;
    { m.chron(a, b) } -> std::convertible_to<bool>;
    { m.causal(a, b) } -> std::convertible_to<bool>;
    { m.tau(a, b) } -> std::convertible_to<ExtReal>;
    { m.describe(a) } -> std::convertible_to<std::string>;
};

// Causal model that can also evaluate a canonical maximal segment between
// two causally related elements at a fraction lambda in [0, 1]. Used to
// evaluate sampled curves between their samples.
template <class M>
concept interpolating_model =
    causal_model<M> && requires(const M& m, const typename M::element_type& a,
                                const typename M::element_type& b, double lam) {
        { m.interp(a, b, lam) } -> std::convertible_to<typename M::element_type>;
    };

// The real line as a Lorentzian pre-length space: x << y iff x < y,
// x <= y as usual, tau(x, y) = y - x on chron pairs and 0 otherwise.
struct RealLine {
    using element_type = double;

    double dist(double a, double b) const { return a < b ? b - a : a - b; }
    bool chron(double a, double b) const { return a < b; }
    bool causal(double a, double b) const { return a <= b; }
    ExtReal tau(double a, double b) const { return a < b ? ExtReal(b - a) : ExtReal(0.0); }
    double interp(double a, double b, double lam) const {
        if (lam <= 0.0) return a;
        if (lam >= 1.0) return b;
        return a + lam * (b - a);
    }
    std::string describe(double x) const {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.9g", x);
        return buf;
    }
    std::string label() const { return "R^1_1"; }

    friend bool operator==(const RealLine&, const RealLine&) { return true; }
};

enum class CurveClass { timelike, causal, null, not_causal };

inline const char* to_string(CurveClass c) {
    switch (c) {
        case CurveClass::timelike: return "timelike";
        case CurveClass::causal: return "causal";
        case CurveClass::null: return "null";
        case CurveClass::not_causal: return "not_causal";
    }
    return "?";
}

// Causal character of a sampled curve relative to its own samples: timelike
// if every ordered pair is chron, null if causal with no chron pair, causal
// otherwise when all ordered pairs are causally related.
template <causal_model M>
CurveClass classify_curve(const M& m, const SampledCurve<typename M::element_type>& c) {
    bool all_chron = true, all_causal = true, any_chron = false;
    const auto& pts = c.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            bool ch = m.chron(pts[i], pts[j]);
            bool ca = m.causal(pts[i], pts[j]);
            all_chron = all_chron && ch;
            all_causal = all_causal && ca;
            any_chron = any_chron || ch;
        }
    }
    if (all_chron) return CurveClass::timelike;
    if (all_causal) return any_chron ? CurveClass::causal : CurveClass::null;
    return CurveClass::not_causal;
}

// Consecutive-pair tau sum on the curve's samples. An upper bound of the
// infimum over partitions; the reverse triangle inequality makes it
// nonincreasing under refinement, and it telescopes exactly on maximal
// parametrizations. Throws std::domain_error on a non-causal curve.
template <causal_model M>
double curve_length_tau(const M& m, const SampledCurve<typename M::element_type>& c) {
    if (classify_curve(m, c) == CurveClass::not_causal)
        throw std::domain_error("curve_length_tau: curve is not causal");
    ExtReal total(0.0);
    for (std::size_t i = 1; i < c.size(); ++i)
        total = total + m.tau(c.points()[i - 1], c.points()[i]);
    return total.as_double();
}

// Dyadic refinement of the tau-length of a parametric causal curve. The
// reverse triangle inequality makes the consecutive-pair sum nonincreasing
// under refinement, so this converges from above; stops once successive
// sums differ by < tol.
template <causal_model M, class F>
double refined_length_tau(const M& m, F&& at, double a, double b, double tol = 1e-7,
                          int max_doublings = 22) {
    if (!(a < b)) throw std::invalid_argument("refined_length_tau: empty parameter range");
    std::size_t n = 2;
    double prev = m.tau(at(a), at(b)).as_double();
    for (int pass = 0; pass < max_doublings; ++pass) {
        n *= 2;
        ExtReal sum(0.0);
        auto last = at(a);
        for (std::size_t i = 1; i <= n; ++i) {
            double u = i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
            auto next = at(u);
            sum = sum + m.tau(last, next);
            last = next;
        }
        double s = sum.as_double();
        if (prev - s < tol) return s;
        prev = s;
    }
    return prev;
}

// I^+/I^-/J^+/J^- membership predicates.
template <causal_model M>
bool in_chron_future(const M& m, const typename M::element_type& base,
                     const typename M::element_type& q) {
    return m.chron(base, q);
}
template <causal_model M>
bool in_chron_past(const M& m, const typename M::element_type& base,
                   const typename M::element_type& q) {
    return m.chron(q, base);
}
template <causal_model M>
bool in_causal_future(const M& m, const typename M::element_type& base,
                      const typename M::element_type& q) {
    return m.causal(base, q);
}
template <causal_model M>
bool in_causal_past(const M& m, const typename M::element_type& base,
                    const typename M::element_type& q) {
    return m.causal(q, base);
}

// Evaluate a sampled curve at parameter u through the model's canonical
// segment interpolation; exact at the curve's own sample parameters.
template <interpolating_model M>
typename M::element_type eval_curve(const M& m, const SampledCurve<typename M::element_type>& c,
                                    double u) {
    const auto& ps = c.params();
    if (u <= ps.front()) return c.points().front();
    if (u >= ps.back()) return c.points().back();
    auto it = std::upper_bound(ps.begin(), ps.end(), u);
    std::size_t hi = static_cast<std::size_t>(it - ps.begin());
    std::size_t lo = hi - 1;
    if (u == ps[lo]) return c.points()[lo];
    double lam = (u - ps[lo]) / (ps[hi] - ps[lo]);
    return m.interp(c.points()[lo], c.points()[hi], lam);
}

}  // namespace lorentz
