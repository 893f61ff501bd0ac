#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lorentz {

// A point of a backend space: coordinate vector for euclidean/taxicab
// (dimension n), a single arc position in [0, C) for the circle.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> cs) : coords(cs) {}
    explicit Point(std::vector<double> cs) : coords(std::move(cs)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

std::string to_string(const Point& p);

// A complete geodesic metric space with a deterministic geodesic rule:
//   euclidean(n)  -- R^n with the L2 metric, straight-line geodesics
//   taxicab(n)    -- R^n with the L1 metric; the canonical geodesic resolves
//                    coordinates in index order (exhaust 0, then 1, ...)
//   circle(C)     -- circle of circumference C; shorter arc, counterclockwise
//                    on antipodal ties
// Immutable value; all operations are pure.
class Backend {
public:
    enum class Kind { euclidean, taxicab, circle };

    static Backend euclidean(std::size_t dim);
    static Backend taxicab(std::size_t dim);
    static Backend circle(double circumference);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    double circumference() const { return circumference_; }

    // Metric distance. Throws std::invalid_argument on a point that does not
    // belong to this backend.
    double dist(const Point& a, const Point& b) const;

    // Point at arclength s along the canonical geodesic from a to b,
    // 0 <= s <= dist(a, b); s outside that range throws std::domain_error.
    Point geodesic_point(const Point& a, const Point& b, double s) const;

    Point midpoint(const Point& a, const Point& b) const;

    // Validates membership: dimension match, circle arc position in [0, C).
    void require_point(const Point& p) const;

    std::string label() const;

    friend bool operator==(const Backend& a, const Backend& b) {
        return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.circumference_ == b.circumference_;
    }

private:
    Backend(Kind k, std::size_t d, double c) : kind_(k), dim_(d), circumference_(c) {}

    Kind kind_;
    std::size_t dim_;
    double circumference_;
};

}  // namespace lorentz
