#include "lorentz/minkowski_taxi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lorentz/sampling.hpp"

namespace lorentz {

std::string to_string(const Event& e) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", e.t);
    return "(" + std::string(buf) + ", " + to_string(e.x) + ")";
}

std::string to_string(const Diamond& d) {
    return "[" + to_string(d.bottom) + " -> " + to_string(d.top) + "]";
}

Event MinkowskiTaxi::interp(const Event& a, const Event& b, double lam) const {
    if (lam <= 0.0) return a;
    if (lam >= 1.0) return b;
    double d = backend_.dist(a.x, b.x);
    return Event{a.t + lam * (b.t - a.t), backend_.geodesic_point(a.x, b.x, lam * d)};
}

Diamond MinkowskiTaxi::make_diamond(const Event& bottom, const Event& top) const {
    if (!causal(bottom, top))
        throw std::invalid_argument("diamond vertices are not causally related: " +
                                    to_string(bottom) + " -> " + to_string(top));
    return Diamond{bottom, top};
}

SampledCurve<Event> maximal_segment(const MinkowskiTaxi& m, const Event& e1, const Event& e2,
                                    std::size_t steps) {
    if (e1 == e2) throw std::domain_error("maximal_segment: events coincide");
    if (!m.causal(e1, e2)) throw std::domain_error("maximal_segment: pair is not causal");
    if (steps < 1) throw std::domain_error("maximal_segment: steps must be >= 1");

    double span = m.tau(e1, e2).value();  // L; the curve runs on [0, L] or [0, 1] when null
    double hi = span > 0.0 ? span : 1.0;
    double d = m.backend().dist(e1.x, e2.x);

    std::vector<double> params;
    std::vector<Event> points;
    params.reserve(steps + 1);
    points.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        double u = i == steps ? hi : hi * static_cast<double>(i) / static_cast<double>(steps);
        params.push_back(u);
        double lam = u / hi;
        if (i == 0) {
            points.push_back(e1);
        } else if (i == steps) {
            points.push_back(e2);
        } else {
            points.push_back(Event{e1.t + lam * (e2.t - e1.t),
                                   m.backend().geodesic_point(e1.x, e2.x, lam * d)});
        }
    }
    return SampledCurve<Event>(std::move(params), std::move(points));
}

namespace {

// Staircase through (time, arclength) breakpoints mapped onto the canonical
// spatial geodesic.
SampledCurve<Event> staircase_from_breakpoints(const MinkowskiTaxi& m, const Event& e1,
                                               const Event& e2, std::vector<double> ts,
                                               std::vector<double> sigmas) {
    std::vector<Event> points;
    points.reserve(ts.size());
    double d = m.backend().dist(e1.x, e2.x);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i == 0) points.push_back(e1);
        else if (i + 1 == ts.size()) points.push_back(e2);
        else points.push_back(Event{ts[i], m.backend().geodesic_point(e1.x, e2.x,
                                                                      std::min(sigmas[i], d))});
    }
    return SampledCurve<Event>(std::move(ts), std::move(points));
}

bool staircase_valid(const std::vector<double>& ts, const std::vector<double>& sigmas) {
    for (std::size_t i = 1; i < ts.size(); ++i) {
        double dt = ts[i] - ts[i - 1];
        double ds = sigmas[i] - sigmas[i - 1];
        if (!(dt > 0.0) || ds < 0.0 || dt < ds) return false;
    }
    return true;
}

}  // namespace

SampledCurve<Event> random_staircase(const MinkowskiTaxi& m, const Event& e1, const Event& e2,
                                     std::uint64_t seed) {
    if (!m.chron(e1, e2)) throw std::domain_error("random_staircase: pair is not chron");
    double d = m.backend().dist(e1.x, e2.x);
    double total = e2.t - e1.t;
    SplitMix64 rng(seed);

    for (int attempt = 0; attempt < 256; ++attempt) {
        std::size_t breaks = 1 + rng.index(3);
        std::vector<double> ts{e1.t};
        std::vector<double> sigmas{0.0};
        for (std::size_t i = 0; i < breaks; ++i) {
            ts.push_back(e1.t + total * rng.real(0.05, 0.95));
            sigmas.push_back(d * rng.real());
        }
        ts.push_back(e2.t);
        sigmas.push_back(d);
        std::sort(ts.begin() + 1, ts.end() - 1);
        std::sort(sigmas.begin() + 1, sigmas.end() - 1);
        if (staircase_valid(ts, sigmas))
            return staircase_from_breakpoints(m, e1, e2, std::move(ts), std::move(sigmas));
    }

    // Corner fallback: pure-time, then a null diagonal, then pure-time again.
    // Always valid since tau(e1, e2) > 0 leaves time to spare.
    double lam = rng.real(0.1, 0.9);
    double L = m.tau(e1, e2).value();
    std::vector<double> ts{e1.t};
    std::vector<double> sigmas{0.0};
    if (lam * L > 0.0) {
        ts.push_back(e1.t + lam * L);
        sigmas.push_back(0.0);
    }
    if (d > 0.0) {
        ts.push_back(e1.t + lam * L + d);
        sigmas.push_back(d);
    }
    ts.push_back(e2.t);
    sigmas.push_back(d);
    for (std::size_t i = ts.size() - 1; i > 0; --i) {
        if (!(ts[i - 1] < ts[i])) {
            ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(i - 1));
            sigmas.erase(sigmas.begin() + static_cast<std::ptrdiff_t>(i - 1));
        }
    }
    return staircase_from_breakpoints(m, e1, e2, std::move(ts), std::move(sigmas));
}

std::vector<SampledCurve<Event>> alt_maximal_curves(const MinkowskiTaxi& m, const Event& e1,
                                                    const Event& e2, std::size_t k,
                                                    std::uint64_t seed) {
    if (!m.chron(e1, e2))
        throw std::domain_error("alt_maximal_curves: pair is not chron (no staircase freedom)");
    if (k < 2) throw std::domain_error("alt_maximal_curves: need k >= 2 curves");

    std::vector<SampledCurve<Event>> out;
    out.reserve(k);
    SplitMix64 rng(seed);
    auto distinct = [&](const SampledCurve<Event>& c) {
        for (const auto& prev : out)
            if (prev.params() == c.params() && prev.points() == c.points()) return false;
        return true;
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (int attempt = 0;; ++attempt) {
            auto c = random_staircase(m, e1, e2, rng.next());
            if (distinct(c) || attempt >= 64) {
                out.push_back(std::move(c));
                break;
            }
        }
    }
    return out;
}

bool diamond_membership(const MinkowskiTaxi& m, const Diamond& d, const Event& e) {
    return m.causal(d.bottom, e) && m.causal(e, d.top);
}

std::vector<Event> diamond_sample(const MinkowskiTaxi& m, const Diamond& d, double h) {
    if (!(h > 0.0)) throw std::domain_error("diamond_sample: spacing must be positive");
    const Backend& backend = m.backend();
    double span = d.top.t - d.bottom.t;

    std::vector<Event> out{d.bottom, d.top};

    std::vector<double> offsets;  // symmetric lattice offsets per spatial axis
    double radius = backend.kind() == Backend::Kind::circle
                        ? std::min(span, backend.circumference() / 2.0)
                        : span;
    const auto max_steps = static_cast<std::size_t>(std::floor(radius / h + 1e-9));
    for (std::size_t i = 0; i <= max_steps; ++i) {
        double o = static_cast<double>(i) * h;
        offsets.push_back(o);
        if (i > 0) offsets.push_back(-o);
    }
    std::sort(offsets.begin(), offsets.end());

    const std::size_t n = backend.kind() == Backend::Kind::circle ? 1 : backend.dim();
    const auto time_steps = static_cast<std::size_t>(std::floor(span / h + 1e-9));
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t ti = 0; ti <= time_steps; ++ti) {
        double t = d.bottom.t + static_cast<double>(ti) * h;
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            Point p = d.bottom.x;
            if (backend.kind() == Backend::Kind::circle) {
                double c = backend.circumference();
                double a = std::fmod(p.coords[0] + offsets[idx[0]], c);
                if (a < 0.0) a += c;
                if (a >= c) a = 0.0;
                p.coords[0] = a;
            } else {
                for (std::size_t i = 0; i < n; ++i) p.coords[i] += offsets[idx[i]];
            }
            Event e{t, std::move(p)};
            if (diamond_membership(m, d, e)) out.push_back(std::move(e));
            std::size_t k = n;
            bool done = true;
            while (k-- > 0) {
                if (++idx[k] < offsets.size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if (done) break;
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool localizing_membership(const MinkowskiTaxi& m, const Event& center, double r, const Event& q) {
    if (!(r > 0.0)) throw std::domain_error("localizing_membership: radius must be positive");
    return m.chron(Event{center.t - r, center.x}, q) && m.chron(q, Event{center.t + r, center.x});
}

bool check_imprisonment_bound(const MinkowskiTaxi& m, const Event& center, double r,
                              const SampledCurve<Event>& c) {
    for (const auto& e : c.points())
        if (!localizing_membership(m, center, r, e))
            throw std::domain_error("check_imprisonment_bound: sample outside Omega^r at " +
                                    to_string(e));
    return curve_length_d(m, c) < 2.0 * r;
}

}  // namespace lorentz
