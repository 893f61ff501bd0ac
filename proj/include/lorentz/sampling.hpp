#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "lorentz/backend.hpp"

namespace lorentz {

// Hand-rolled generator so seeded runs stay byte-identical across standard
// libraries (std::uniform_* distributions are implementation defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double real(double lo, double hi) { return lo + (hi - lo) * real(); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // Derives an independent stream, e.g. one per trial.
    SplitMix64 fork(std::uint64_t salt) {
        return SplitMix64(next() ^ (salt * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull));
    }

private:
    std::uint64_t state_;
};

// Random point of a backend: coordinates in [lo, hi] for euclidean/taxicab,
// arc position in [0, C) for the circle.
inline Point sample_point(const Backend& backend, SplitMix64& rng, double lo = -5.0,
                          double hi = 5.0) {
    if (backend.kind() == Backend::Kind::circle) {
        double c = backend.circumference();
        double a = rng.real(0.0, c);
        if (a >= c) a = 0.0;
        return Point{{a}};
    }
    std::vector<double> coords(backend.dim());
    for (auto& c : coords) c = rng.real(lo, hi);
    return Point(std::move(coords));
}

inline std::vector<Point> sample_points(const Backend& backend, std::size_t n, SplitMix64& rng,
                                        double lo = -5.0, double hi = 5.0) {
    std::vector<Point> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_point(backend, rng, lo, hi));
    return out;
}

}  // namespace lorentz
