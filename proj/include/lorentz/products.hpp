#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/backend.hpp"
#include "lorentz/causal_model.hpp"
#include "lorentz/curve.hpp"
#include "lorentz/ext_real.hpp"

namespace lorentz {

// Lorentzian taxicab product Y x_T X of a causal factor Y and a metric
// backend X:
//   d_T  = d_Y + d_X
//   (a,b) <<_T (p,q)  iff  tau_Y(a,p) >  d_X(b,q)
//   (a,b) <=_T (p,q)  iff  tau_Y(a,p) >= d_X(b,q) and a <=_Y p
//   tau_T = tau_Y - d_X on chron pairs, 0 otherwise
template <causal_model Y>
class TaxicabProduct {
public:
    using factor_type = typename Y::element_type;
    using element_type = std::pair<factor_type, Point>;

    TaxicabProduct(Y causal_factor, Backend spatial_factor)
        : y_(std::move(causal_factor)), x_(std::move(spatial_factor)) {}

    const Y& causal_factor() const { return y_; }
    const Backend& spatial_factor() const { return x_; }

    double dist(const element_type& u, const element_type& v) const {
        return y_.dist(u.first, v.first) + x_.dist(u.second, v.second);
    }
    bool chron(const element_type& u, const element_type& v) const {
        return y_.tau(u.first, v.first) > ExtReal(x_.dist(u.second, v.second));
    }
    bool causal(const element_type& u, const element_type& v) const {
        return y_.tau(u.first, v.first) >= ExtReal(x_.dist(u.second, v.second)) &&
               y_.causal(u.first, v.first);
    }
    ExtReal tau(const element_type& u, const element_type& v) const {
        double dx = x_.dist(u.second, v.second);
        ExtReal ty = y_.tau(u.first, v.first);
        if (!(ty > ExtReal(dx))) return ExtReal(0.0);
        return ty - dx;
    }
    element_type interp(const element_type& u, const element_type& v, double lam) const
        requires interpolating_model<Y>
    {
        if (lam <= 0.0) return u;
        if (lam >= 1.0) return v;
        double dx = x_.dist(u.second, v.second);
        return {y_.interp(u.first, v.first, lam), x_.geodesic_point(u.second, v.second, lam * dx)};
    }

    std::string describe(const element_type& e) const {
        return "(" + y_.describe(e.first) + ", " + to_string(e.second) + ")";
    }
    std::string label() const { return y_.label() + " x_T " + x_.label(); }

    friend bool operator==(const TaxicabProduct& a, const TaxicabProduct& b) {
        return a.y_ == b.y_ && a.x_ == b.x_;
    }

private:
    Y y_;
    Backend x_;
};

// Lorentzian uniform product X x_inf Y of two causal factors:
//   d_inf = max of factor distances, relations componentwise,
//   tau_inf = min of factor separations.
template <causal_model MX, causal_model MY>
class UniformProduct {
public:
    using element_type = std::pair<typename MX::element_type, typename MY::element_type>;

    UniformProduct(MX x, MY y) : x_(std::move(x)), y_(std::move(y)) {}

    const MX& x_factor() const { return x_; }
    const MY& y_factor() const { return y_; }

    double dist(const element_type& u, const element_type& v) const {
        double dx = x_.dist(u.first, v.first);
        double dy = y_.dist(u.second, v.second);
        return dx > dy ? dx : dy;
    }
    bool chron(const element_type& u, const element_type& v) const {
        return x_.chron(u.first, v.first) && y_.chron(u.second, v.second);
    }
    bool causal(const element_type& u, const element_type& v) const {
        return x_.causal(u.first, v.first) && y_.causal(u.second, v.second);
    }
    ExtReal tau(const element_type& u, const element_type& v) const {
        return min(x_.tau(u.first, v.first), y_.tau(u.second, v.second));
    }
    element_type interp(const element_type& u, const element_type& v, double lam) const
        requires interpolating_model<MX> && interpolating_model<MY>
    {
        if (lam <= 0.0) return u;
        if (lam >= 1.0) return v;
        return {x_.interp(u.first, v.first, lam), y_.interp(u.second, v.second, lam)};
    }

    std::string describe(const element_type& e) const {
        return "(" + x_.describe(e.first) + "; " + y_.describe(e.second) + ")";
    }
    std::string label() const { return x_.label() + " x_inf " + y_.label(); }

    friend bool operator==(const UniformProduct& a, const UniformProduct& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    MX x_;
    MY y_;
};

// Combination of two future causal factor curves into a causal curve of the
// uniform product, gamma(t) = (gamma_1(phi_1(t)), gamma_2(phi_2(t))) with
// affine phi_i onto the factor parameter ranges, emitted at steps+1 shared
// parameters on [0, 1]. Factor evaluation between samples follows the
// factors' canonical maximal segments, so two maximal timelike inputs with
// tau-lengths r1, r2 combine into a maximal curve of tau-length min{r1, r2}.
template <interpolating_model MX, interpolating_model MY>
SampledCurve<typename UniformProduct<MX, MY>::element_type> combine_causal_curves(
    const UniformProduct<MX, MY>& product, const SampledCurve<typename MX::element_type>& c1,
    const SampledCurve<typename MY::element_type>& c2, std::size_t steps = 0) {
    if (classify_curve(product.x_factor(), c1) == CurveClass::not_causal)
        throw std::domain_error("combine_causal_curves: first factor curve is not causal");
    if (classify_curve(product.y_factor(), c2) == CurveClass::not_causal)
        throw std::domain_error("combine_causal_curves: second factor curve is not causal");
    if (steps == 0) steps = std::max(c1.size(), c2.size()) - 1;

    std::vector<double> params;
    std::vector<typename UniformProduct<MX, MY>::element_type> points;
    params.reserve(steps + 1);
    points.reserve(steps + 1);
    auto at1 = [&](double t) {
        double u = c1.param_lo() + t * (c1.param_hi() - c1.param_lo());
        return eval_curve(product.x_factor(), c1, u);
    };
    auto at2 = [&](double t) {
        double u = c2.param_lo() + t * (c2.param_hi() - c2.param_lo());
        return eval_curve(product.y_factor(), c2, u);
    };
    for (std::size_t k = 0; k <= steps; ++k) {
        double t = k == steps ? 1.0 : static_cast<double>(k) / static_cast<double>(steps);
        params.push_back(t);
        points.emplace_back(at1(t), at2(t));
    }
    return SampledCurve<typename UniformProduct<MX, MY>::element_type>(std::move(params),
                                                                       std::move(points));
}

}  // namespace lorentz
