#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentz/causal_model.hpp"
#include "lorentz/ext_real.hpp"
#include "lorentz/metric_hyperspace.hpp"

namespace lorentz {

// Finite stand-in for a compact subset of a causal model: nonempty element
// list, deduplicated; the model travels with the set so mismatched
// operations fail structurally.
template <causal_model M>
class EventSet {
public:
    EventSet(M model, std::vector<typename M::element_type> elements)
        : model_(std::move(model)), elements_(std::move(elements)) {
        if (elements_.empty()) throw std::invalid_argument("EventSet must be nonempty");
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const M& model() const { return model_; }
    const std::vector<typename M::element_type>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    friend bool operator==(const EventSet& a, const EventSet& b) {
        return a.model_ == b.model_ && a.elements_ == b.elements_;
    }

private:
    M model_;
    std::vector<typename M::element_type> elements_;
};

namespace detail {

template <causal_model M>
void require_shared_model(const EventSet<M>& a, const EventSet<M>& b) {
    if (!(a.model() == b.model()))
        throw std::invalid_argument("event sets live over different models");
}

}  // namespace detail

// A <<_H B: every a sees some b0 in its chronological future and every b is
// seen by some a0. causal_H is the same condition for <=.
template <causal_model M>
bool chron_H(const EventSet<M>& a, const EventSet<M>& b) {
    detail::require_shared_model(a, b);
    const M& m = a.model();
    for (const auto& x : a.elements()) {
        bool hit = false;
        for (const auto& y : b.elements())
            if (m.chron(x, y)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    for (const auto& y : b.elements()) {
        bool hit = false;
        for (const auto& x : a.elements())
            if (m.chron(x, y)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

template <causal_model M>
bool causal_H(const EventSet<M>& a, const EventSet<M>& b) {
    detail::require_shared_model(a, b);
    const M& m = a.model();
    for (const auto& x : a.elements()) {
        bool hit = false;
        for (const auto& y : b.elements())
            if (m.causal(x, y)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    for (const auto& y : b.elements()) {
        bool hit = false;
        for (const auto& x : a.elements())
            if (m.causal(x, y)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// dist_L^-(x, C) = sup tau(x, c), dist_L^+(C, x) = sup tau(c, x); maxima on
// finite lists, so both are attained.
template <causal_model M>
ExtReal dist_L_minus(const M& m, const typename M::element_type& x, const EventSet<M>& c) {
    ExtReal best(0.0);
    for (const auto& e : c.elements()) best = max(best, m.tau(x, e));
    return best;
}

template <causal_model M>
ExtReal dist_L_plus(const M& m, const EventSet<M>& c, const typename M::element_type& x) {
    ExtReal best(0.0);
    for (const auto& e : c.elements()) best = max(best, m.tau(e, x));
    return best;
}

enum class TubularSign { past, future };  // past: dist_L^-, future: dist_L^+

// Membership in the Lorentzian tubular set of radius r > 0.
template <causal_model M>
bool lorentz_tubular_membership(const EventSet<M>& c, double r, const typename M::element_type& x,
                                TubularSign sign) {
    if (!(r > 0.0)) throw std::domain_error("lorentz tubular radius must be positive");
    return sign == TubularSign::past ? dist_L_minus(c.model(), x, c) >= ExtReal(r)
                                     : dist_L_plus(c.model(), c, x) >= ExtReal(r);
}

// tau_H(A, B) = min{ inf_a dist_L^-(a, B), inf_b dist_L^+(b, A) }, evaluated
// exactly over the finite lists. Zero whenever causal_H fails; infinite only
// when some underlying tau is infinite.
template <causal_model M>
ExtReal tau_H(const EventSet<M>& a, const EventSet<M>& b) {
    detail::require_shared_model(a, b);
    const M& m = a.model();
    bool first = true;
    ExtReal lhs(0.0);
    for (const auto& x : a.elements()) {
        ExtReal d = dist_L_minus(m, x, b);
        lhs = first ? d : min(lhs, d);
        first = false;
    }
    first = true;
    ExtReal rhs(0.0);
    for (const auto& y : b.elements()) {
        ExtReal d = dist_L_plus(m, a, y);
        rhs = first ? d : min(rhs, d);
        first = false;
    }
    return min(lhs, rhs);
}

// The Lorentzian hyperspace of finite sets as a causal model in its own
// right: d_H metric, quantifier relations, tau_H separation. Suitable for
// the same audits as any base model.
template <causal_model M>
class HyperspaceModel {
public:
    using element_type = EventSet<M>;

    explicit HyperspaceModel(M base) : base_(std::move(base)) {}

    const M& base() const { return base_; }

    double dist(const element_type& a, const element_type& b) const {
        return finite_hausdorff(base_, a.elements(), b.elements());
    }
    bool chron(const element_type& a, const element_type& b) const { return chron_H(a, b); }
    bool causal(const element_type& a, const element_type& b) const { return causal_H(a, b); }
    ExtReal tau(const element_type& a, const element_type& b) const { return tau_H(a, b); }

    std::string describe(const element_type& s) const {
        std::string out = "{";
        const auto& es = s.elements();
        for (std::size_t i = 0; i < es.size() && i < 4; ++i) {
            if (i) out += ", ";
            out += base_.describe(es[i]);
        }
        if (es.size() > 4) out += ", ...";
        return out + "}";
    }
    std::string label() const { return "H(" + base_.label() + ")"; }

    friend bool operator==(const HyperspaceModel& a, const HyperspaceModel& b) {
        return a.base_ == b.base_;
    }

private:
    M base_;
};

}  // namespace lorentz
