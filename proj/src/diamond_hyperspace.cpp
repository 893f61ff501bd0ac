#include "lorentz/diamond_hyperspace.hpp"

#include <cmath>
#include <stdexcept>

namespace lorentz {

bool causal_H_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2) {
    return m.causal(d1.bottom, d2.bottom) && m.causal(d1.top, d2.top);
}

double hausdorff_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2) {
    double bottom = std::fabs(d2.bottom.t - d1.bottom.t) + m.backend().dist(d1.bottom.x, d2.bottom.x);
    double top = std::fabs(d2.top.t - d1.top.t) + m.backend().dist(d1.top.x, d2.top.x);
    return bottom > top ? bottom : top;
}

double tau_H_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2) {
    if (!causal_H_diamonds(m, d1, d2)) return 0.0;
    double bottom = d2.bottom.t - d1.bottom.t - m.backend().dist(d1.bottom.x, d2.bottom.x);
    double top = d2.top.t - d1.top.t - m.backend().dist(d1.top.x, d2.top.x);
    return bottom < top ? bottom : top;
}

Diamond diamond_tubular(const MinkowskiTaxi& m, const Diamond& d, double r) {
    if (r < 0.0) throw std::domain_error("diamond_tubular: radius must be nonnegative");
    return m.make_diamond(Event{d.bottom.t - r, d.bottom.x}, Event{d.top.t + r, d.top.x});
}

Diamond causal_geodesic(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2, double u) {
    if (!causal_H_diamonds(m, d1, d2))
        throw std::domain_error("causal_geodesic: diamonds are not causally related");
    double r = hausdorff_diamonds(m, d1, d2);
    if (r == 0.0) throw std::domain_error("causal_geodesic: diamonds coincide (r = 0)");
    if (u < 0.0 || u > r) throw std::domain_error("causal_geodesic: u outside [0, d_H]");
    return m.make_diamond(Event{d2.bottom.t + u - r, d2.bottom.x}, Event{d1.top.t + u, d1.top.x});
}

std::pair<double, double> causal_geodesic_endpoint_gap(const MinkowskiTaxi& m, const Diamond& d1,
                                                       const Diamond& d2) {
    double r = hausdorff_diamonds(m, d1, d2);
    Diamond start = causal_geodesic(m, d1, d2, 0.0);
    Diamond stop = causal_geodesic(m, d1, d2, r);
    return {hausdorff_diamonds(m, start, d1), hausdorff_diamonds(m, stop, d2)};
}

Diamond interpolate_diamonds(const MinkowskiTaxi& m, const Diamond& d1, const Diamond& d2,
                             double t) {
    double r = hausdorff_diamonds(m, d1, d2);
    if (r == 0.0) throw std::domain_error("interpolate_diamonds: diamonds coincide (r = 0)");
    if (t < 0.0 || t > r) throw std::domain_error("interpolate_diamonds: t outside [0, d_H]");
    if (t == 0.0) return d1;
    if (t == r) return d2;
    double lam = t / r;
    Event bottom = m.interp(d1.bottom, d2.bottom, lam);
    Event top = m.interp(d1.top, d2.top, lam);
    return m.make_diamond(bottom, top);
}

std::pair<Event, Event> embed(const Diamond& d) { return {d.bottom, d.top}; }

double interval_tau_H(double x, double t, double y, double s) {
    if (t < 0.0 || s < 0.0) throw std::domain_error("interval_tau_H: radii must be nonnegative");
    double spread = std::fabs(t - s);
    if (y - x < spread) return 0.0;
    return y - x - spread;
}

}  // namespace lorentz
