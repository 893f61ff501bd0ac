#pragma once

#include <string>
#include <utility>

#include "lorentz/ext_real.hpp"
#include "lorentz/minkowski_taxi.hpp"

namespace lorentz {

// D1 <=_H D2 reduces to endpointwise causal comparison of the vertices.
bool causal_H_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2);

// Closed form for the Hausdorff distance induced by d_T:
//   max{ |t2 - t1| + d(x1, x2), |s2 - s1| + d(y1, y2) }.
double hausdorff_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2);

// Closed form for the time separation on causally related diamonds:
//   min{ t2 - t1 - d(x1, x2), s2 - s1 - d(y1, y2) };  0 otherwise.
double tau_H_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2);

// Closed tubular neighborhood of a diamond is a diamond: vertices move to
// (t - r, x) and (s + r, y).
Diamond diamond_tubular(const MinkowskiTaxi& m, const Diamond& d, double r);

// Causal geodesic through tubular sections, gamma(u) with vertices
// (t2 + u - r, x2) and (s1 + u, y1), r = hausdorff_diamonds(D1, D2) > 0;
// tau_H_diamonds(gamma(u), gamma(v)) = v - u for u <= v. Note gamma(0) need
// not coincide with D1 when x1 != x2; see endpoint_gap below.
Diamond causal_geodesic(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2, double u);

// d_H between gamma(0) and D1 (and gamma(r) and D2): the measured endpoint
// mismatch of the causal geodesic family, reported rather than asserted.
std::pair<double, double> causal_geodesic_endpoint_gap(const MinkowskiTaxi& m, const Diamond& d1,
                                                       const Diamond& d2);

// Metric geodesic on diamonds through the vertex embedding: both vertices
// move along d_T-affine paths with progress proportional to t / r, so
// hausdorff_diamonds(D1, interp(t)) = t and hausdorff_diamonds(interp(t),
// D2) = r - t. An extension of the toolkit, not a closed form of the
// hyperspace construction itself.
Diamond interpolate_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2,
                             double t);

// Vertex-pair embedding into the uniform product of two copies of the taxi
// product; an isometry for d_H and tau_H preserving.
std::pair<Event, Event> embed(const Diamond& d);

// The D(R^1_1) special case on closed intervals [x-t, x+t], [y-s, y+s]:
// tau_H = y - x - |t - s| when the intervals are causally related, else 0.
// Radii must be nonnegative.
double interval_tau_H(double x, double t, double y, double s);

// The space of causal diamonds as a causal model: d_H metric, endpointwise
// causal order, chron from tau_H > 0, tau_H separation.
class DiamondModel {
public:
    using element_type = Diamond;

    explicit DiamondModel(MinkowskiTaxi base) : base_(std::move(base)) {}

    const MinkowskiTaxi& base() const { return base_; }

    double dist(const Diamond& a, const Diamond& b) const {
        return hausdorff_diamonds(base_, a, b);
    }
    bool causal(const Diamond& a, const Diamond& b) const {
        return causal_H_diamonds(base_, a, b);
    }
    bool chron(const Diamond& a, const Diamond& b) const {
        return tau_H_diamonds(base_, a, b) > 0.0;
    }
    ExtReal tau(const Diamond& a, const Diamond& b) const {
        return ExtReal(tau_H_diamonds(base_, a, b));
    }

    std::string describe(const Diamond& d) const { return to_string(d); }
    std::string label() const { return "D(" + base_.label() + ")"; }

    friend bool operator==(const DiamondModel& a, const DiamondModel& b) {
        return a.base_ == b.base_;
    }

private:
    MinkowskiTaxi base_;
};

}  // namespace lorentz
