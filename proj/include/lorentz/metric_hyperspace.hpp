#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lorentz/backend.hpp"
#include "lorentz/curve.hpp"

namespace lorentz {

// Finite stand-in for a compact set: nonempty point list over one backend,
// exact duplicates removed, kept sorted for deterministic iteration.
class FiniteSet {
public:
    FiniteSet(Backend backend, std::vector<Point> points);

    const Backend& backend() const { return backend_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    // Set equality (order-insensitive, exact coordinates).
    friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
        return a.backend_ == b.backend_ && a.points_ == b.points_;
    }

private:
    Backend backend_;
    std::vector<Point> points_;  // sorted, deduplicated
};

// inf over A of d(p, a); the set is nonempty by construction.
double dist_point_set(const Point& p, const FiniteSet& a);

// d_H(A, B) = max of the two directed sup-of-dist quantities.
double hausdorff(const FiniteSet& a, const FiniteSet& b);

// Membership in the closed tubular neighborhood of radius r.
bool tubular_membership(const FiniteSet& a, double r, const Point& p);

// Directed-sup Hausdorff over plain element lists of any metric carrier.
// Early-break scan: once an element of B lies within the current sup, the
// query point cannot raise it. The value is order independent.
template <class M, class E>
    requires metric_over<M, E>
double finite_dist_to_set(const M& m, const E& p, const std::vector<E>& set) {
    double best = m.dist(p, set.front());
    for (std::size_t i = 1; i < set.size(); ++i) {
        double d = m.dist(p, set[i]);
        if (d < best) best = d;
    }
    return best;
}

template <class M, class E>
    requires metric_over<M, E>
double finite_directed_hausdorff(const M& m, const std::vector<E>& from,
                                 const std::vector<E>& to) {
    double sup = 0.0;
    std::size_t hot = 0;  // index that broke the previous scan; points nearby break fast
    for (const auto& p : from) {
        double best = -1.0;
        bool below = false;
        for (std::size_t k = 0; k < to.size(); ++k) {
            std::size_t j = hot + k < to.size() ? hot + k : hot + k - to.size();
            double d = m.dist(p, to[j]);
            if (d <= sup) {
                below = true;
                hot = j;
                break;
            }
            if (best < 0.0 || d < best) best = d;
        }
        if (!below && best > sup) sup = best;
    }
    return sup;
}

template <class M, class E>
    requires metric_over<M, E>
double finite_hausdorff(const M& m, const std::vector<E>& a, const std::vector<E>& b) {
    return std::max(finite_directed_hausdorff(m, a, b), finite_directed_hausdorff(m, b, a));
}

// Axis-aligned bounding box; for the circle backend the single axis spans
// the whole circumference [0, C).
struct Box {
    std::vector<double> lo, hi;

    bool empty() const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i]) return true;
        return false;
    }
};

// A point region with a membership predicate and a bounding box, composable
// from balls, tubular neighborhoods and intersections. Stands in for sets
// like closed tubular neighborhoods whose point sets are infinite.
class Region {
public:
    static Region ball(const Backend& backend, Point center, double radius);
    static Region tubular(FiniteSet base, double radius);
    static Region intersection(Region a, Region b);

    const Backend& backend() const { return backend_; }
    const Box& bounding_box() const { return box_; }
    bool contains(const Point& p) const { return member_(p); }

    // Lattice points of spacing h inside the bounding box that pass the
    // membership predicate, in lexicographic order.
    std::vector<Point> grid_sample(double h) const;

private:
    Region(Backend backend, Box box, std::function<bool(const Point&)> member)
        : backend_(std::move(backend)), box_(std::move(box)), member_(std::move(member)) {}

    Backend backend_;
    Box box_;
    std::function<bool(const Point&)> member_;
};

// Grid realization of the hyperspace geodesic alpha(t) = cl U_t(A) n cl
// U_{r-t}(B), r = d_H(A, B): every lattice point of spacing h passing both
// tubular memberships plus exact geodesic witnesses for the pairs realizing
// d_H, so the result is nonempty for every t independent of h. Endpoints
// return A and B exactly.
FiniteSet hyperspace_geodesic(const FiniteSet& a, const FiniteSet& b, double t, double h);

}  // namespace lorentz
