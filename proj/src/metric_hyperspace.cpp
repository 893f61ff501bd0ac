#include "lorentz/metric_hyperspace.hpp"

#include <cmath>
#include <stdexcept>

namespace lorentz {

FiniteSet::FiniteSet(Backend backend, std::vector<Point> points)
    : backend_(std::move(backend)), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("FiniteSet must be nonempty");
    for (const auto& p : points_) backend_.require_point(p);
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

namespace {

void require_shared(const FiniteSet& a, const FiniteSet& b) {
    if (!(a.backend() == b.backend()))
        throw std::invalid_argument("finite sets live over different backends");
}

}  // namespace

double dist_point_set(const Point& p, const FiniteSet& a) {
    return finite_dist_to_set(a.backend(), p, a.points());
}

double hausdorff(const FiniteSet& a, const FiniteSet& b) {
    require_shared(a, b);
    return finite_hausdorff(a.backend(), a.points(), b.points());
}

bool tubular_membership(const FiniteSet& a, double r, const Point& p) {
    if (r < 0.0) throw std::domain_error("tubular radius must be nonnegative");
    return dist_point_set(p, a) <= r;
}

Region Region::ball(const Backend& backend, Point center, double radius) {
    if (radius < 0.0) throw std::domain_error("ball radius must be nonnegative");
    backend.require_point(center);
    Box box;
    if (backend.kind() == Backend::Kind::circle) {
        box.lo = {0.0};
        box.hi = {backend.circumference()};
    } else {
        box.lo.resize(backend.dim());
        box.hi.resize(backend.dim());
        for (std::size_t i = 0; i < backend.dim(); ++i) {
            box.lo[i] = center[i] - radius;
            box.hi[i] = center[i] + radius;
        }
    }
    return Region(backend, std::move(box),
                  [backend, center = std::move(center), radius](const Point& p) {
                      return backend.dist(center, p) <= radius;
                  });
}

Region Region::tubular(FiniteSet base, double radius) {
    if (radius < 0.0) throw std::domain_error("tubular radius must be nonnegative");
    const Backend backend = base.backend();
    Box box;
    if (backend.kind() == Backend::Kind::circle) {
        box.lo = {0.0};
        box.hi = {backend.circumference()};
    } else {
        box.lo.assign(backend.dim(), 0.0);
        box.hi.assign(backend.dim(), 0.0);
        for (std::size_t i = 0; i < backend.dim(); ++i) {
            double lo = base.points().front()[i];
            double hi = lo;
            for (const auto& p : base.points()) {
                lo = std::min(lo, p[i]);
                hi = std::max(hi, p[i]);
            }
            box.lo[i] = lo - radius;
            box.hi[i] = hi + radius;
        }
    }
    return Region(backend, std::move(box), [base = std::move(base), radius](const Point& p) {
        return dist_point_set(p, base) <= radius;
    });
}

Region Region::intersection(Region a, Region b) {
    if (!(a.backend_ == b.backend_))
        throw std::invalid_argument("region intersection across different backends");
    Box box;
    box.lo.resize(a.box_.lo.size());
    box.hi.resize(a.box_.hi.size());
    for (std::size_t i = 0; i < box.lo.size(); ++i) {
        box.lo[i] = std::max(a.box_.lo[i], b.box_.lo[i]);
        box.hi[i] = std::min(a.box_.hi[i], b.box_.hi[i]);
    }
    auto am = a.member_;
    auto bm = b.member_;
    return Region(a.backend_, std::move(box),
                  [am = std::move(am), bm = std::move(bm)](const Point& p) {
                      return am(p) && bm(p);
                  });
}

std::vector<Point> Region::grid_sample(double h) const {
    if (!(h > 0.0)) throw std::domain_error("grid spacing must be positive");
    std::vector<Point> out;
    if (box_.empty()) return out;

    if (backend_.kind() == Backend::Kind::circle) {
        double c = backend_.circumference();
        for (std::size_t i = 0; static_cast<double>(i) * h < c; ++i) {
            Point p{{static_cast<double>(i) * h}};
            if (member_(p)) out.push_back(p);
        }
        return out;
    }

    const std::size_t n = backend_.dim();
    std::vector<std::size_t> counts(n);
    for (std::size_t i = 0; i < n; ++i) {
        double span = box_.hi[i] - box_.lo[i];
        counts[i] = static_cast<std::size_t>(std::floor(span / h + 1e-9)) + 1;
    }
    std::vector<std::size_t> idx(n, 0);
    Point p;
    p.coords.resize(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i)
            p.coords[i] = box_.lo[i] + static_cast<double>(idx[i]) * h;
        if (member_(p)) out.push_back(p);
        std::size_t k = n;
        while (k-- > 0) {
            if (++idx[k] < counts[k]) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

namespace {

Point nearest_point(const Backend& backend, const Point& from, const FiniteSet& in) {
    double best = -1.0;
    Point nearest = in.points().front();
    for (const auto& q : in.points()) {
        double d = backend.dist(from, q);
        if (best < 0.0 || d < best) {
            best = d;
            nearest = q;
        }
    }
    return nearest;
}

}  // namespace

FiniteSet hyperspace_geodesic(const FiniteSet& a, const FiniteSet& b, double t, double h) {
    require_shared(a, b);
    double r = hausdorff(a, b);
    if (r == 0.0) throw std::domain_error("hyperspace_geodesic: sets coincide (r = 0)");
    if (t < 0.0 || t > r)
        throw std::domain_error("hyperspace_geodesic: t outside [0, d_H(A,B)]");
    if (t == 0.0) return a;
    if (t == r) return b;

    const Backend& backend = a.backend();
    Region lens = Region::intersection(Region::tubular(a, t), Region::tubular(b, r - t));
    std::vector<Point> pts = lens.grid_sample(h);

    // Exact tangency witnesses: for every p of A the point at arc t along
    // the geodesic towards its nearest B point, and for every q of B the
    // matching point approached from its nearest A point. Each lies in the
    // section (the pair distance is at most r), so the section is nonempty
    // and both directed Hausdorff bounds hold independent of the lattice.
    for (const auto& p : a.points()) {
        Point q = nearest_point(backend, p, b);
        double d = backend.dist(p, q);
        pts.push_back(backend.geodesic_point(p, q, std::min(t, d)));
    }
    for (const auto& q : b.points()) {
        Point p = nearest_point(backend, q, a);
        double d = backend.dist(p, q);
        pts.push_back(backend.geodesic_point(p, q, std::min(t, d)));
    }
    return FiniteSet(backend, std::move(pts));
}

}  // namespace lorentz
