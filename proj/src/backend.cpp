#include "lorentz/backend.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lorentz {

std::string to_string(const Point& p) {
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.9g", p.coords[i]);
        if (i) out += ", ";
        out += buf;
    }
    out += ")";
    return out;
}

Backend Backend::euclidean(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("euclidean backend needs dimension >= 1");
    return Backend(Kind::euclidean, dim, 0.0);
}

Backend Backend::taxicab(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("taxicab backend needs dimension >= 1");
    return Backend(Kind::taxicab, dim, 0.0);
}

Backend Backend::circle(double circumference) {
    if (!(circumference > 0.0))
        throw std::invalid_argument("circle backend needs positive circumference");
    return Backend(Kind::circle, 1, circumference);
}

void Backend::require_point(const Point& p) const {
    if (p.dim() != dim_)
        throw std::invalid_argument("point dimension " + std::to_string(p.dim()) +
                                    " does not match backend " + label());
    if (kind_ == Kind::circle) {
        double a = p[0];
        if (!(a >= 0.0 && a < circumference_))
            throw std::invalid_argument("circle arc position " + std::to_string(a) +
                                        " outside [0, " + std::to_string(circumference_) + ")");
    }
}

namespace {

double wrap_arc(double x, double c) {
    double y = std::fmod(x, c);
    if (y < 0.0) y += c;
    if (y >= c) y = 0.0;
    return y;
}

}  // namespace

double Backend::dist(const Point& a, const Point& b) const {
    require_point(a);
    require_point(b);
    switch (kind_) {
        case Kind::euclidean: {
            double s = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) {
                double d = a[i] - b[i];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case Kind::taxicab: {
            double s = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) s += std::fabs(a[i] - b[i]);
            return s;
        }
        case Kind::circle: {
            double f = std::fabs(a[0] - b[0]);
            return f <= circumference_ - f ? f : circumference_ - f;
        }
    }
    return 0.0;
}

Point Backend::geodesic_point(const Point& a, const Point& b, double s) const {
    double d = dist(a, b);
    if (s < 0.0 || s > d)
        throw std::domain_error("geodesic arclength " + std::to_string(s) +
                                " outside [0, " + std::to_string(d) + "]");
    if (s == 0.0) return a;
    if (s == d) return b;

    switch (kind_) {
        case Kind::euclidean: {
            Point out = a;
            double f = s / d;
            for (std::size_t i = 0; i < dim_; ++i)
                out.coords[i] = a[i] + f * (b[i] - a[i]);
            return out;
        }
        case Kind::taxicab: {
            // Canonical rule: spend arclength on coordinate 0 first, then 1, ...
            Point out = a;
            double remaining = s;
            for (std::size_t i = 0; i < dim_ && remaining > 0.0; ++i) {
                double span = std::fabs(b[i] - a[i]);
                double step = remaining < span ? remaining : span;
                out.coords[i] = a[i] + (b[i] >= a[i] ? step : -step);
                remaining -= step;
            }
            return out;
        }
        case Kind::circle: {
            // Shorter arc; counterclockwise (increasing arc position) on ties.
            double fwd = wrap_arc(b[0] - a[0], circumference_);
            bool ccw = fwd <= circumference_ - fwd;
            double pos = ccw ? a[0] + s : a[0] - s;
            return Point{{wrap_arc(pos, circumference_)}};
        }
    }
    return a;
}

Point Backend::midpoint(const Point& a, const Point& b) const {
    return geodesic_point(a, b, dist(a, b) / 2.0);
}

std::string Backend::label() const {
    switch (kind_) {
        case Kind::euclidean: return "euclidean(" + std::to_string(dim_) + ")";
        case Kind::taxicab: return "taxicab(" + std::to_string(dim_) + ")";
        case Kind::circle: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", circumference_);
            return std::string("circle(") + buf + ")";
        }
    }
    return "?";
}

}  // namespace lorentz
