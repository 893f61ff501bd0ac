#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz/causal_model.hpp"
#include "lorentz/sampling.hpp"

namespace lorentz {

inline constexpr double kAuditTol = 1e-9;

struct AxiomCheck {
    AxiomCheck() = default;
    explicit AxiomCheck(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::size_t checked = 0;
    bool exhaustive = true;
    bool passed = true;
    std::string witness;  // nonempty exactly when the check failed
};

struct AxiomReport {
    std::string model;
    std::uint64_t seed = 0;
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

std::string format_report(const AxiomReport& report);

namespace detail {

// Runs fn over index tuples of arity K drawn from [0, n). Exhausts the full
// n^K product when it fits in the budget, otherwise draws `budget` random
// tuples from the seeded generator. Returns the number of tuples visited.
template <std::size_t K, class Fn>
std::size_t for_each_tuple(std::size_t n, std::size_t budget, SplitMix64& rng, Fn&& fn) {
    std::size_t total = 1;
    bool fits = true;
    for (std::size_t k = 0; k < K && fits; ++k) {
        if (total > budget / n) fits = false;
        else total *= n;
    }
    std::size_t idx[K] = {};
    if (fits && total <= budget) {
        for (std::size_t t = 0; t < total; ++t) {
            fn(idx);
            for (std::size_t k = K; k-- > 0;) {
                if (++idx[k] < n) break;
                idx[k] = 0;
            }
        }
        return total;
    }
    for (std::size_t t = 0; t < budget; ++t) {
        for (std::size_t k = 0; k < K; ++k) idx[k] = rng.index(n);
        fn(idx);
    }
    return budget;
}

}  // namespace detail

// Desk-scale audit of the pre-length space axioms over a finite sample:
// pre-order of <=, transitivity of <<, << contained in <=, tau-positivity
// iff chron, tau = 0 off the causal relation, and the reverse triangle
// inequality on causal chains. Reports witnesses instead of throwing.
template <causal_model M>
AxiomReport audit_axioms(const M& m, const std::vector<typename M::element_type>& sample,
                         std::uint64_t seed, std::size_t budget = 10000) {
    if (sample.empty()) throw std::invalid_argument("audit_axioms: empty sample");
    AxiomReport report;
    report.model = m.label();
    report.seed = seed;
    const std::size_t n = sample.size();
    SplitMix64 rng(seed);

    AxiomCheck reflexive{"causal_reflexive"};
    for (std::size_t i = 0; i < n; ++i) {
        ++reflexive.checked;
        if (!m.causal(sample[i], sample[i]) && reflexive.passed) {
            reflexive.passed = false;
            reflexive.witness = "x=" + m.describe(sample[i]);
        }
    }
    report.checks.push_back(std::move(reflexive));

    AxiomCheck chron_in_causal{"chron_implies_causal"};
    AxiomCheck tau_iff{"tau_positive_iff_chron"};
    AxiomCheck offcausal{"noncausal_tau_zero"};
    std::size_t pairs = detail::for_each_tuple<2>(n, budget, rng, [&](const std::size_t* ix) {
        const auto& x = sample[ix[0]];
        const auto& y = sample[ix[1]];
        bool ch = m.chron(x, y);
        bool ca = m.causal(x, y);
        ExtReal t = m.tau(x, y);
        if (ch && !ca && chron_in_causal.passed) {
            chron_in_causal.passed = false;
            chron_in_causal.witness = "x=" + m.describe(x) + ", y=" + m.describe(y);
        }
        if ((t > ExtReal(0.0)) != ch && tau_iff.passed) {
            tau_iff.passed = false;
            tau_iff.witness = "x=" + m.describe(x) + ", y=" + m.describe(y) +
                              ", tau=" + to_string(t) + ", chron=" + (ch ? "true" : "false");
        }
        if (!ca && !(t == ExtReal(0.0)) && offcausal.passed) {
            offcausal.passed = false;
            offcausal.witness =
                "x=" + m.describe(x) + ", y=" + m.describe(y) + ", tau=" + to_string(t);
        }
    });
    bool pair_exhaustive = pairs == n * n;
    for (AxiomCheck* c : {&chron_in_causal, &tau_iff, &offcausal}) {
        c->checked = pairs;
        c->exhaustive = pair_exhaustive;
    }
    report.checks.push_back(std::move(chron_in_causal));
    report.checks.push_back(std::move(tau_iff));
    report.checks.push_back(std::move(offcausal));

    AxiomCheck causal_trans{"causal_transitive"};
    AxiomCheck chron_trans{"chron_transitive"};
    AxiomCheck reverse{"reverse_triangle"};
    std::size_t triples = detail::for_each_tuple<3>(n, budget, rng, [&](const std::size_t* ix) {
        const auto& x = sample[ix[0]];
        const auto& y = sample[ix[1]];
        const auto& z = sample[ix[2]];
        if (m.causal(x, y) && m.causal(y, z)) {
            if (!m.causal(x, z) && causal_trans.passed) {
                causal_trans.passed = false;
                causal_trans.witness = "x=" + m.describe(x) + ", y=" + m.describe(y) +
                                       ", z=" + m.describe(z);
            }
            ExtReal whole = m.tau(x, z);
            ExtReal split = m.tau(x, y) + m.tau(y, z);
            bool ok = split.is_infinite() ? whole.is_infinite()
                                          : (whole.is_infinite() ||
                                             whole.value() + kAuditTol >= split.value());
            if (!ok && reverse.passed) {
                reverse.passed = false;
                reverse.witness = "x=" + m.describe(x) + ", y=" + m.describe(y) +
                                  ", z=" + m.describe(z) + "; tau(x,z)=" + to_string(whole) +
                                  " < tau(x,y)+tau(y,z)=" + to_string(split);
            }
        }
        if (m.chron(x, y) && m.chron(y, z) && !m.chron(x, z) && chron_trans.passed) {
            chron_trans.passed = false;
            chron_trans.witness =
                "x=" + m.describe(x) + ", y=" + m.describe(y) + ", z=" + m.describe(z);
        }
    });
    bool triple_exhaustive = triples == n * n * n;
    for (AxiomCheck* c : {&causal_trans, &chron_trans, &reverse}) {
        c->checked = triples;
        c->exhaustive = triple_exhaustive;
    }
    report.checks.push_back(std::move(causal_trans));
    report.checks.push_back(std::move(chron_trans));
    report.checks.push_back(std::move(reverse));
    return report;
}

// Push-up property: x <= y << z or x << y <= z forces x << z.
template <causal_model M>
AxiomReport audit_pushup(const M& m, const std::vector<typename M::element_type>& sample,
                         std::uint64_t seed, std::size_t budget = 10000) {
    if (sample.empty()) throw std::invalid_argument("audit_pushup: empty sample");
    AxiomReport report;
    report.model = m.label();
    report.seed = seed;
    SplitMix64 rng(seed);
    const std::size_t n = sample.size();

    AxiomCheck up{"pushup_causal_chron"};
    AxiomCheck down{"pushup_chron_causal"};
    std::size_t triples = detail::for_each_tuple<3>(n, budget, rng, [&](const std::size_t* ix) {
        const auto& x = sample[ix[0]];
        const auto& y = sample[ix[1]];
        const auto& z = sample[ix[2]];
        if (m.causal(x, y) && m.chron(y, z) && !m.chron(x, z) && up.passed) {
            up.passed = false;
            up.witness = "x=" + m.describe(x) + " <= y=" + m.describe(y) +
                         " << z=" + m.describe(z) + " but not x << z";
        }
        if (m.chron(x, y) && m.causal(y, z) && !m.chron(x, z) && down.passed) {
            down.passed = false;
            down.witness = "x=" + m.describe(x) + " << y=" + m.describe(y) +
                           " <= z=" + m.describe(z) + " but not x << z";
        }
    });
    up.checked = down.checked = triples;
    up.exhaustive = down.exhaustive = triples == n * n * n;
    report.checks.push_back(std::move(up));
    report.checks.push_back(std::move(down));
    return report;
}

}  // namespace lorentz
