#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lorentz {

// Anything carrying a metric over its element type (backends, causal models).
template <class M, class E>
concept metric_over = requires(const M& m, const E& a, const E& b) {
    { m.dist(a, b) } -> std::convertible_to<double>;
};

// Finite carrier for a curve: strictly increasing parameter list plus the
// sampled points, at least two of them.
template <class E>
class SampledCurve {
public:
    SampledCurve(std::vector<double> params, std::vector<E> points)
        : params_(std::move(params)), points_(std::move(points)) {
        if (params_.size() < 2)
            throw std::domain_error("SampledCurve needs at least 2 samples");
        if (params_.size() != points_.size())
            throw std::invalid_argument("SampledCurve: params/points size mismatch");
        for (std::size_t i = 1; i < params_.size(); ++i)
            if (!(params_[i - 1] < params_[i]))
                throw std::invalid_argument("SampledCurve: params must be strictly increasing");
    }

    std::size_t size() const { return params_.size(); }
    const std::vector<double>& params() const { return params_; }
    const std::vector<E>& points() const { return points_; }
    double param_lo() const { return params_.front(); }
    double param_hi() const { return params_.back(); }

private:
    std::vector<double> params_;
    std::vector<E> points_;
};

// Partition sum S(P) over the curve's own samples: the polyline lower bound
// of the length functional, exact for polylines through the samples.
template <class M, class E>
    requires metric_over<M, E>
double curve_length_d(const M& m, const SampledCurve<E>& c) {
    double total = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i)
        total += m.dist(c.points()[i - 1], c.points()[i]);
    return total;
}

// Dyadic refinement of the d-length of a parametric curve at: [a,b] -> E.
// Doubles the sample count until successive partition sums differ by < tol;
// converges from below (refinement is nondecreasing).
template <class M, class F>
double refined_length_d(const M& m, F&& at, double a, double b, double tol = 1e-7,
                        int max_doublings = 22) {
    if (!(a < b)) throw std::invalid_argument("refined_length_d: empty parameter range");
    std::size_t n = 2;
    double prev = m.dist(at(a), at(b));
    for (int pass = 0; pass < max_doublings; ++pass) {
        n *= 2;
        double sum = 0.0;
        auto last = at(a);
        for (std::size_t i = 1; i <= n; ++i) {
            double u = i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
            auto next = at(u);
            sum += m.dist(last, next);
            last = next;
        }
        if (sum - prev < tol) return sum;
        prev = sum;
    }
    return prev;
}

}  // namespace lorentz
