// Command-line front end: scenario-driven audits, closed-form computations
// and curve/geodesic emission. Exit codes: 0 success, 1 audit/property
// failure, 2 usage or scenario errors.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lorentz/audit.hpp"
#include "lorentz/diamond_hyperspace.hpp"
#include "lorentz/lorentz_hyperspace.hpp"
#include "lorentz/metric_hyperspace.hpp"
#include "lorentz/minkowski_taxi.hpp"
#include "lorentz/products.hpp"
#include "lorentz/sampling.hpp"
#include "lorentz/scenario.hpp"

namespace {

using namespace lorentz;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string scenario_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double grid = 0.0;
    bool grid_set = false;
    std::string out_path;
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_event(const Event& e) {
    std::string out = "(" + fmt(e.t) + ", (";
    for (std::size_t i = 0; i < e.x.dim(); ++i) {
        if (i) out += ", ";
        out += fmt(e.x[i]);
    }
    return out + "))";
}

Scenario load_scenario(const Options& opt) {
    Scenario s = opt.scenario_path.empty() ? Scenario::builtin_default()
                                           : Scenario::from_file(opt.scenario_path);
    if (opt.seed_set) s.audit.seed = opt.seed;
    if (opt.grid_set) s.audit.grid = opt.grid;
    return s;
}

// ---------------------------------------------------------------------------
// audit

std::vector<double> real_pool(SplitMix64& rng, std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = rng.real(-5.0, 5.0);
    return out;
}

std::vector<Event> event_pool(const Backend& backend, SplitMix64& rng, std::size_t n) {
    std::vector<Event> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Event{rng.real(-5.0, 5.0), sample_point(backend, rng)});
    return out;
}

std::vector<Diamond> diamond_pool(const MinkowskiTaxi& taxi, SplitMix64& rng, std::size_t n) {
    std::vector<Diamond> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Event bottom{rng.real(-5.0, 5.0), sample_point(taxi.backend(), rng)};
        Point target = sample_point(taxi.backend(), rng);
        double d = taxi.backend().dist(bottom.x, target);
        Event top{bottom.t + d + rng.real(0.0, 3.0), target};
        out.push_back(taxi.make_diamond(bottom, top));
    }
    return out;
}

template <causal_model M>
std::vector<EventSet<M>> set_pool(const M& base, SplitMix64& rng, std::size_t n,
                                  const std::vector<typename M::element_type>& elements) {
    std::vector<EventSet<M>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t size = 1 + rng.index(4);
        std::vector<typename M::element_type> chosen;
        for (std::size_t k = 0; k < size; ++k)
            chosen.push_back(elements[rng.index(elements.size())]);
        out.push_back(EventSet<M>(base, std::move(chosen)));
    }
    return out;
}

template <causal_model M>
bool run_audit_pair(const M& model, const std::vector<typename M::element_type>& pool,
                    std::uint64_t seed, std::size_t budget) {
    AxiomReport axioms = audit_axioms(model, pool, seed, budget);
    AxiomReport pushup = audit_pushup(model, pool, seed, budget);
    std::fputs(format_report(axioms).c_str(), stdout);
    std::fputs(format_report(pushup).c_str(), stdout);
    return axioms.all_passed() && pushup.all_passed();
}

int cmd_audit(const Options& opt) {
    Scenario scenario = load_scenario(opt);
    const std::size_t budget = scenario.audit.samples;
    const std::uint64_t seed = scenario.audit.seed;
    SplitMix64 rng(seed);
    std::size_t pool = 1;
    while (pool * pool < budget && pool < 512) ++pool;

    bool ok = true;
    RealLine real;
    ok &= run_audit_pair(real, real_pool(rng, pool), seed, budget);

    MinkowskiTaxi taxi(scenario.backend);
    ok &= run_audit_pair(taxi, event_pool(scenario.backend, rng, pool), seed, budget);

    UniformProduct<RealLine, RealLine> uniform_rr(real, real);
    {
        std::vector<std::pair<double, double>> pairs;
        pairs.reserve(pool);
        for (std::size_t i = 0; i < pool; ++i)
            pairs.emplace_back(rng.real(-5.0, 5.0), rng.real(-5.0, 5.0));
        ok &= run_audit_pair(uniform_rr, pairs, seed, budget);
    }

    UniformProduct<MinkowskiTaxi, MinkowskiTaxi> uniform_tt(taxi, taxi);
    {
        auto left = event_pool(scenario.backend, rng, pool);
        auto right = event_pool(scenario.backend, rng, pool);
        std::vector<std::pair<Event, Event>> pairs;
        pairs.reserve(pool);
        for (std::size_t i = 0; i < pool; ++i) pairs.emplace_back(left[i], right[i]);
        ok &= run_audit_pair(uniform_tt, pairs, seed, budget);
    }

    HyperspaceModel<RealLine> hyper_real(real);
    ok &= run_audit_pair(hyper_real, set_pool(real, rng, 48, real_pool(rng, 64)), seed, budget);

    HyperspaceModel<MinkowskiTaxi> hyper_taxi(taxi);
    ok &= run_audit_pair(hyper_taxi,
                         set_pool(taxi, rng, 48, event_pool(scenario.backend, rng, 64)), seed,
                         budget);

    DiamondModel diamonds(taxi);
    ok &= run_audit_pair(diamonds, diamond_pool(taxi, rng, pool), seed, budget);

    if (scenario.audit.custom_model) {
        const TableModel& table = *scenario.audit.custom_model;
        ok &= run_audit_pair(table, table.all_elements(), seed, budget);
    }

    std::printf("audit: %s\n", ok ? "all checks passed" : "FAILURES detected");
    return ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// compute verbs

const Event& named_event(const Scenario& s, const std::string& name) {
    auto it = s.events.find(name);
    if (it == s.events.end()) throw ScenarioError("unknown event '" + name + "'");
    return it->second;
}

const Diamond* find_diamond(const Scenario& s, const std::string& name) {
    auto it = s.diamonds.find(name);
    return it == s.diamonds.end() ? nullptr : &it->second;
}

const SetEntry* find_set(const Scenario& s, const std::string& name) {
    auto it = s.sets.find(name);
    return it == s.sets.end() ? nullptr : &it->second;
}

int cmd_tau(const Options& opt, const std::string& a, const std::string& b) {
    Scenario s = load_scenario(opt);
    MinkowskiTaxi taxi(s.backend);
    std::printf("%s\n", fmt(taxi.tau(named_event(s, a), named_event(s, b)).as_double()).c_str());
    return kExitOk;
}

int cmd_tau_h(const Options& opt, const std::string& a, const std::string& b) {
    Scenario s = load_scenario(opt);
    MinkowskiTaxi taxi(s.backend);
    if (const Diamond* da = find_diamond(s, a)) {
        const Diamond* db = find_diamond(s, b);
        if (!db) throw ScenarioError("unknown diamond '" + b + "'");
        std::printf("%s\n", fmt(tau_H_diamonds(taxi, *da, *db)).c_str());
        return kExitOk;
    }
    const SetEntry* sa = find_set(s, a);
    const SetEntry* sb = find_set(s, b);
    if (!sa || !sb) throw ScenarioError("tau-h needs two diamonds or two event sets");
    if (!sa->is_event_set() || !sb->is_event_set())
        throw ScenarioError("tau-h on sets requires event sets, got point sets");
    EventSet<MinkowskiTaxi> ea(taxi, sa->events), eb(taxi, sb->events);
    std::printf("%s\n", fmt(tau_H(ea, eb).as_double()).c_str());
    return kExitOk;
}

int cmd_hausdorff(const Options& opt, const std::string& a, const std::string& b) {
    Scenario s = load_scenario(opt);
    MinkowskiTaxi taxi(s.backend);
    if (const Diamond* da = find_diamond(s, a)) {
        const Diamond* db = find_diamond(s, b);
        if (!db) throw ScenarioError("unknown diamond '" + b + "'");
        std::printf("%s\n", fmt(hausdorff_diamonds(taxi, *da, *db)).c_str());
        return kExitOk;
    }
    const SetEntry* sa = find_set(s, a);
    const SetEntry* sb = find_set(s, b);
    if (!sa || !sb) throw ScenarioError("hausdorff needs two diamonds or two sets");
    if (sa->is_event_set() != sb->is_event_set())
        throw ScenarioError("hausdorff: sets must share a flavor (points or events)");
    if (sa->is_event_set()) {
        std::printf("%s\n", fmt(finite_hausdorff(taxi, sa->events, sb->events)).c_str());
    } else {
        FiniteSet fa(s.backend, sa->points), fb(s.backend, sb->points);
        std::printf("%s\n", fmt(hausdorff(fa, fb)).c_str());
    }
    return kExitOk;
}

// Accepts "[lo,hi]" literals or scenario interval names.
Interval parse_interval_arg(const Scenario& s, const std::string& arg) {
    if (!arg.empty() && arg.front() == '[') {
        double lo = 0.0, hi = 0.0;
        if (std::sscanf(arg.c_str(), "[%lf,%lf]", &lo, &hi) != 2 || hi < lo)
            throw ScenarioError("cannot parse interval literal '" + arg + "'");
        return Interval{lo, hi};
    }
    auto it = s.intervals.find(arg);
    if (it == s.intervals.end()) throw ScenarioError("unknown interval '" + arg + "'");
    return it->second;
}

int cmd_interval_tau(const Options& opt, const std::string& a, const std::string& b) {
    Scenario s = load_scenario(opt);
    Interval ia = parse_interval_arg(s, a);
    Interval ib = parse_interval_arg(s, b);
    std::printf("%s\n",
                fmt(interval_tau_H(ia.center(), ia.radius(), ib.center(), ib.radius())).c_str());
    return kExitOk;
}

int cmd_embed(const Options& opt, const std::string& a) {
    Scenario s = load_scenario(opt);
    const Diamond* d = find_diamond(s, a);
    if (!d) throw ScenarioError("unknown diamond '" + a + "'");
    auto [bottom, top] = embed(*d);
    std::printf("(%s, %s)\n", fmt_event(bottom).c_str(), fmt_event(top).c_str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// geodesic emission

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ScenarioError("cannot write '" + path + "'");
    out << content;
}

std::string indexed_path(const std::string& path, std::size_t i) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos || dot == 0) return path + "_" + std::to_string(i);
    return path.substr(0, dot) + "_" + std::to_string(i) + path.substr(dot);
}

std::string event_curve_csv(const SampledCurve<Event>& c, std::size_t dim) {
    std::string csv = "u,t";
    for (std::size_t i = 0; i < dim; ++i) csv += ",x" + std::to_string(i);
    csv += "\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        csv += fmt(c.params()[i]) + "," + fmt(c.points()[i].t);
        for (std::size_t k = 0; k < dim; ++k) csv += "," + fmt(c.points()[i].x[k]);
        csv += "\n";
    }
    return csv;
}

int cmd_geodesic(const Options& opt, const std::string& kind, const std::string& a,
                 const std::string& b, std::size_t steps, std::size_t count) {
    Scenario s = load_scenario(opt);
    MinkowskiTaxi taxi(s.backend);
    std::string out_path = opt.out_path.empty() ? "geodesic.csv" : opt.out_path;
    if (steps == 0) throw ScenarioError("geodesic needs --steps >= 1");

    if (kind == "maximal-segment") {
        auto c = maximal_segment(taxi, named_event(s, a), named_event(s, b), steps);
        write_file(out_path, event_curve_csv(c, s.backend.dim()));
        std::printf("tau_length=%s dT_length=%s rows=%zu\n",
                    fmt(curve_length_tau(taxi, c)).c_str(), fmt(curve_length_d(taxi, c)).c_str(),
                    c.size());
        return kExitOk;
    }

    if (kind == "staircase") {
        if (count < 2) throw ScenarioError("staircase needs --count >= 2");
        auto curves =
            alt_maximal_curves(taxi, named_event(s, a), named_event(s, b), count, s.audit.seed);
        double expected = taxi.tau(named_event(s, a), named_event(s, b)).as_double();
        double spread = 0.0;
        std::string lengths;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            write_file(indexed_path(out_path, i), event_curve_csv(curves[i], s.backend.dim()));
            double len = curve_length_tau(taxi, curves[i]);
            spread = std::max(spread, std::fabs(len - expected));
            if (i) lengths += " ";
            lengths += fmt(len);
        }
        std::printf("tau_lengths=%s expected=%s max_deviation=%s files=%zu\n", lengths.c_str(),
                    fmt(expected).c_str(), fmt(spread).c_str(), curves.size());
        return kExitOk;
    }

    if (kind == "causal-diamonds" || kind == "interp-diamonds") {
        const Diamond* da = find_diamond(s, a);
        const Diamond* db = find_diamond(s, b);
        if (!da || !db) throw ScenarioError("diamond geodesics need two diamond names");
        double r = hausdorff_diamonds(taxi, *da, *db);
        if (r == 0.0) throw ScenarioError("diamonds coincide (r = 0)");
        bool causal_kind = kind == "causal-diamonds";

        std::string csv = "u,bt";
        for (std::size_t i = 0; i < s.backend.dim(); ++i) csv += ",bx" + std::to_string(i);
        csv += ",tt";
        for (std::size_t i = 0; i < s.backend.dim(); ++i) csv += ",tx" + std::to_string(i);
        csv += causal_kind ? ",tauH_residual" : ",dH_residual";
        csv += "\n";

        double max_residual = 0.0;
        Diamond start = causal_kind ? causal_geodesic(taxi, *da, *db, 0.0) : *da;
        for (std::size_t i = 0; i <= steps; ++i) {
            double u = i == steps ? r : r * static_cast<double>(i) / static_cast<double>(steps);
            Diamond g = causal_kind ? causal_geodesic(taxi, *da, *db, u)
                                    : interpolate_diamonds(taxi, *da, *db, u);
            double residual = causal_kind ? std::fabs(tau_H_diamonds(taxi, start, g) - u)
                                          : std::fabs(hausdorff_diamonds(taxi, *da, g) - u);
            max_residual = std::max(max_residual, residual);
            csv += fmt(u) + "," + fmt(g.bottom.t);
            for (std::size_t k = 0; k < s.backend.dim(); ++k) csv += "," + fmt(g.bottom.x[k]);
            csv += "," + fmt(g.top.t);
            for (std::size_t k = 0; k < s.backend.dim(); ++k) csv += "," + fmt(g.top.x[k]);
            csv += "," + fmt(residual) + "\n";
        }
        write_file(out_path, csv);
        if (causal_kind) {
            auto [gap0, gap1] = causal_geodesic_endpoint_gap(taxi, *da, *db);
            std::printf("r=%s max_residual=%s endpoint_gap_start=%s endpoint_gap_end=%s rows=%zu\n",
                        fmt(r).c_str(), fmt(max_residual).c_str(), fmt(gap0).c_str(),
                        fmt(gap1).c_str(), steps + 1);
        } else {
            std::printf("r=%s max_residual=%s rows=%zu\n", fmt(r).c_str(),
                        fmt(max_residual).c_str(), steps + 1);
        }
        return kExitOk;
    }

    if (kind == "metric-sets") {
        const SetEntry* sa = find_set(s, a);
        const SetEntry* sb = find_set(s, b);
        if (!sa || !sb || sa->is_event_set() || sb->is_event_set())
            throw ScenarioError("metric-sets needs two point-set names");
        FiniteSet fa(s.backend, sa->points), fb(s.backend, sb->points);
        double r = hausdorff(fa, fb);
        if (r == 0.0) throw ScenarioError("sets coincide (r = 0)");
        double h = s.audit.grid;

        std::string csv = "t,size,dH_to_A,dH_to_B\n";
        double max_residual = 0.0;
        for (std::size_t i = 0; i <= steps; ++i) {
            double t = i == steps ? r : r * static_cast<double>(i) / static_cast<double>(steps);
            FiniteSet section = hyperspace_geodesic(fa, fb, t, h);
            double da = hausdorff(fa, section);
            double db = hausdorff(section, fb);
            max_residual = std::max({max_residual, std::fabs(da - t), std::fabs(db - (r - t))});
            csv += fmt(t) + "," + std::to_string(section.size()) + "," + fmt(da) + "," + fmt(db) +
                   "\n";
        }
        write_file(out_path, csv);
        std::printf("r=%s grid=%s max_residual=%s rows=%zu\n", fmt(r).c_str(), fmt(h).c_str(),
                    fmt(max_residual).c_str(), steps + 1);
        return kExitOk;
    }

    throw ScenarioError("unknown geodesic kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic Lorentzian geometry toolkit: products, hyperspaces and audits"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--scenario", opt.scenario_path,
                   "Scenario JSON path (built-in default if omitted)");
    auto* seed_opt = app.add_option("--seed", opt.seed, "Seed for randomized flows (default 0)");
    auto* grid_opt = app.add_option("--grid", opt.grid, "Grid spacing override");
    app.add_option("--out", opt.out_path, "Output path for emitted tables");

    auto* audit_cmd = app.add_subcommand("audit", "Run every registered axiom audit");

    std::string arg_a, arg_b, arg_kind;
    std::size_t arg_steps = 16, arg_count = 5;

    auto* tau_cmd = app.add_subcommand("tau", "Time separation of two named events");
    tau_cmd->add_option("--a", arg_a)->required();
    tau_cmd->add_option("--b", arg_b)->required();

    auto* tauh_cmd = app.add_subcommand("tau-h", "tau_H of two diamonds or event sets");
    tauh_cmd->add_option("--a", arg_a)->required();
    tauh_cmd->add_option("--b", arg_b)->required();

    auto* haus_cmd = app.add_subcommand("hausdorff", "Hausdorff distance of two diamonds or sets");
    haus_cmd->add_option("--a", arg_a)->required();
    haus_cmd->add_option("--b", arg_b)->required();

    auto* interval_cmd = app.add_subcommand("interval-tau", "tau_H of two closed intervals");
    interval_cmd->add_option("--a", arg_a)->required();
    interval_cmd->add_option("--b", arg_b)->required();

    auto* embed_cmd = app.add_subcommand("embed", "Vertex-pair embedding of a diamond");
    embed_cmd->add_option("--a", arg_a)->required();

    auto* geo_cmd = app.add_subcommand("geodesic", "Emit a geodesic/curve table");
    geo_cmd->add_option("--kind", arg_kind,
                        "metric-sets | causal-diamonds | interp-diamonds | maximal-segment | "
                        "staircase")
        ->required();
    geo_cmd->add_option("--a", arg_a)->required();
    geo_cmd->add_option("--b", arg_b);
    geo_cmd->add_option("--steps", arg_steps, "Rows emitted = steps + 1");
    geo_cmd->add_option("--count", arg_count, "Curve count for staircase");

    // global flags may follow the verb
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    opt.seed_set = seed_opt->count() > 0;
    opt.grid_set = grid_opt->count() > 0;

    try {
        if (audit_cmd->parsed()) return cmd_audit(opt);
        if (tau_cmd->parsed()) return cmd_tau(opt, arg_a, arg_b);
        if (tauh_cmd->parsed()) return cmd_tau_h(opt, arg_a, arg_b);
        if (haus_cmd->parsed()) return cmd_hausdorff(opt, arg_a, arg_b);
        if (interval_cmd->parsed()) return cmd_interval_tau(opt, arg_a, arg_b);
        if (embed_cmd->parsed()) return cmd_embed(opt, arg_a);
        if (geo_cmd->parsed())
            return cmd_geodesic(opt, arg_kind, arg_a, arg_b, arg_steps, arg_count);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
