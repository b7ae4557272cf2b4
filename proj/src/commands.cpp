#include "bohr/commands.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "bohr/corpus.hpp"
#include "bohr/errors.hpp"
#include "bohr/radii.hpp"
#include "bohr/selftest.hpp"
#include "bohr/sharpness.hpp"

namespace bohr {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kVerifySlack = 1e-9;
constexpr double kReconstructionLimit = 1e-9;
constexpr double kDefaultAboveOffset = 0.02;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fmt(double x) { return format_number(x); }

Json operator_params(const CommandOptions& o) {
    Json p;
    p["op"] = o.op;
    if (o.op == "cesaro" || o.op == "cbeta") {
        p["beta"] = o.beta;
    } else if (o.op == "bernardi") {
        p["gamma"] = o.gamma;
        p["m"] = o.m;
    }
    return p;
}

Json describe_family(const RadiusFamily& family) {
    return std::visit(Overloaded{
                          [](const op::CesaroBeta& k) { return Json{{"family", "cesaro"}, {"beta", k.beta}}; },
                          [](const op::Bernardi& k) {
                              return Json{{"family", "bernardi"}, {"gamma", k.gamma}, {"m", k.m}};
                          },
                          [](const op::Identity&) { return Json{{"family", "bohr"}}; },
                      },
                      family);
}

struct SampleOutcome {
    double majorant = 0.0;
    double bound = 0.0;
    std::string kind;
};

}  // namespace

OperatorKind operator_from_options(const CommandOptions& o) {
    OperatorKind kind;
    if (o.op == "cesaro") {
        kind = op::CesaroBeta{o.beta};
    } else if (o.op == "cbeta") {
        kind = op::CBeta{o.beta};
    } else if (o.op == "bernardi") {
        kind = op::Bernardi{o.gamma, o.m};
    } else if (o.op == "libera") {
        kind = op::Libera{};
    } else if (o.op == "alexander") {
        kind = op::Alexander{};
    } else if (o.op == "primitive") {
        kind = op::PrimitiveI{};
    } else if (o.op == "bohr") {
        kind = op::Identity{};
    } else {
        throw DomainError("unknown operator '" + o.op + "'");
    }
    validate(kind);
    return kind;
}

RunReport cmd_radius(const CommandOptions& o) {
    RunReport report;
    report.command = "radius";
    report.seed = o.seed;
    report.params = operator_params(o);
    report.params["tol"] = o.tol;

    const auto kind = operator_from_options(o);
    const auto problem = radius_problem_for(kind);
    const auto result = solve_radius(problem, o.tol);

    report.results["operator"] = describe(kind);
    report.results["equation"] = describe_family(problem.family);
    report.results["root"] = result.root;
    report.results["residual"] = result.residual;
    report.results["bracket"] = Json::array({result.bracket.first, result.bracket.second});
    report.results["iterations"] = result.iterations;

    report.table.header = {"op", "root", "residual", "bracket_lo", "bracket_hi", "iterations"};
    report.table.rows.push_back({o.op, fmt(result.root), fmt(result.residual), fmt(result.bracket.first),
                                 fmt(result.bracket.second), std::to_string(result.iterations)});
    return report;
}

RunReport cmd_curve(const CommandOptions& o) {
    RunReport report;
    report.command = "curve";
    report.seed = o.seed;
    report.params = operator_params(o);
    report.params["tol"] = o.tol;

    std::vector<double> grid = o.grid;
    if (o.grid_from || o.grid_to || o.grid_steps > 0) {
        if (!o.grid_from || !o.grid_to || o.grid_steps < 0) {
            throw DomainError("a range grid needs --from, --to and --steps");
        }
        for (int i = 0; i < o.grid_steps; ++i) {
            const double t = o.grid_steps == 1 ? 0.0 : static_cast<double>(i) / (o.grid_steps - 1);
            grid.push_back(*o.grid_from + t * (*o.grid_to - *o.grid_from));
        }
        std::sort(grid.begin(), grid.end());
    }
    report.params["grid"] = grid;

    const auto problem = radius_problem_for(operator_from_options(o));
    RadiusFamily base = problem.family;
    if (o.op == "cbeta" || o.op == "cesaro") {
        report.results["param"] = "beta";
    } else if (std::holds_alternative<op::Bernardi>(base)) {
        report.results["param"] = "gamma";
        report.results["m"] = std::get<op::Bernardi>(base).m;
    } else {
        throw DomainError("curve sweeps beta (cesaro, cbeta) or gamma (bernardi family)");
    }
    const auto curve = radius_curve(base, grid, o.tol);

    Json rows = Json::array();
    report.table.header = {"param", "root", "residual"};
    for (const auto& row : curve.rows) {
        rows.push_back(Json{{"param", row.param}, {"root", row.result.root}, {"residual", row.result.residual}});
        report.table.rows.push_back({fmt(row.param), fmt(row.result.root), fmt(row.result.residual)});
    }
    report.results["rows"] = rows;
    report.results["continuous"] = curve.continuous;
    return report;
}

RunReport cmd_verify(const CommandOptions& o) {
    RunReport report;
    report.command = "verify";
    report.seed = o.seed;
    report.params = operator_params(o);
    report.params["samples"] = o.samples;
    report.params["r_mode"] = o.r_mode;
    if (o.r) {
        report.params["r"] = *o.r;
    }
    report.params["eps"] = o.eps;
    report.params["tol"] = o.tol;

    if (o.samples < 1) {
        throw DomainError("verify needs --samples >= 1");
    }
    if (o.threads < 1) {
        throw DomainError("verify needs --threads >= 1");
    }
    const auto kind = operator_from_options(o);
    const auto problem = radius_problem_for(kind);
    const double radius = solve_radius(problem, o.tol).root;
    report.results["operator"] = describe(kind);
    report.results["radius"] = radius;

    if (o.r_mode == "above") {
        const double r = o.r.value_or(std::min(radius + kDefaultAboveOffset, 0.99));
        if (!(r > radius)) {
            throw DomainError("above mode needs --r greater than the radius " + format_number(radius));
        }
        const auto search = violation_search(problem, r, o.tol);
        report.results["r"] = r;
        report.results["scanned"] = search.scanned;
        report.table.header = {"r", "radius", "witness_a", "k", "majorant", "bound"};
        if (search.witness) {
            const auto& w = *search.witness;
            report.results["witness"] =
                Json{{"a", w.a}, {"k", w.k}, {"majorant", w.majorant}, {"bound", w.bound}, {"excess", w.majorant - w.bound}};
            report.table.rows.push_back(
                {fmt(r), fmt(radius), fmt(w.a), std::to_string(w.k), fmt(w.majorant), fmt(w.bound)});
        } else {
            report.results["witness"] = nullptr;
            report.exit_code = kExitViolation;
        }
        report.results["passed"] = search.witness.has_value();
        return report;
    }

    double r = 0.0;
    if (o.r_mode == "below") {
        r = 0.99 * radius;
    } else if (o.r_mode == "at") {
        r = radius;
    } else {
        throw DomainError("--r-mode must be below, at or above");
    }
    report.results["r"] = r;

    const int zeros = required_leading_zeros(kind);
    const double bound = operator_bound(kind, r);
    const auto samples = static_cast<std::size_t>(o.samples);
    std::vector<SampleOutcome> outcomes(samples);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto f = random_schur(mix_seed(o.seed, i), o.max_factors, kBlaschkeRadiusCap).times_z_power(zeros);
            outcomes[i] = SampleOutcome{majorant_value(kind, f, r, o.eps), bound, f.describe()};
        }
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(o.threads), samples);
    if (threads <= 1) {
        work(0, samples);
    } else {
        std::vector<std::future<void>> jobs;
        const std::size_t chunk = (samples + threads - 1) / threads;
        for (std::size_t begin = 0; begin < samples; begin += chunk) {
            jobs.push_back(std::async(std::launch::async, work, begin, std::min(samples, begin + chunk)));
        }
        for (auto& job : jobs) {
            job.get();
        }
    }

    // Aggregated in index order so the report does not depend on scheduling.
    std::size_t violations = 0;
    double max_margin = -std::numeric_limits<double>::infinity();
    std::size_t worst_index = 0;
    Json first_violation = nullptr;
    report.table.header = {"index", "seed", "function", "majorant", "bound", "margin"};
    for (std::size_t i = 0; i < samples; ++i) {
        const auto& s = outcomes[i];
        const double margin = s.majorant - s.bound;
        if (margin > max_margin) {
            max_margin = margin;
            worst_index = i;
        }
        if (margin > kVerifySlack) {
            if (violations == 0) {
                first_violation = Json{{"index", i}, {"seed", mix_seed(o.seed, i)}, {"function", s.kind}, {"margin", margin}};
            }
            ++violations;
        }
        report.table.rows.push_back({std::to_string(i), std::to_string(mix_seed(o.seed, i)), s.kind, fmt(s.majorant),
                                     fmt(s.bound), fmt(margin)});
    }
    report.results["bound"] = bound;
    report.results["violations"] = violations;
    report.results["max_margin"] = max_margin;
    report.results["worst_index"] = worst_index;
    report.results["first_violation"] = first_violation;
    report.results["passed"] = violations == 0;
    if (violations > 0) {
        report.exit_code = kExitViolation;
    }
    return report;
}

RunReport cmd_sharpness(const CommandOptions& o) {
    RunReport report;
    report.command = "sharpness";
    report.seed = o.seed;
    report.params = operator_params(o);
    const double r = o.r.value_or(0.5);
    report.params["r"] = r;
    std::vector<double> a_values = o.a_values;
    if (a_values.empty()) {
        a_values = {0.0, 0.5, 0.9, 0.99, 0.999, 1.0};
    }
    report.params["a"] = a_values;
    report.params["eps"] = o.eps;

    const auto problem = radius_problem_for(operator_from_options(o));
    const double radius = solve_radius(problem, o.tol).root;
    report.results["equation"] = describe_family(problem.family);
    report.results["radius"] = radius;

    Json rows = Json::array();
    double worst_mismatch = 0.0;
    report.table.header = {"a", "bound_term", "deficit_term", "remainder", "total", "direct", "mismatch"};
    const double eps = std::min(o.eps, 1e-13);
    for (double a : a_values) {
        const auto d = decompose(problem, a, r, eps);
        const double direct = extremal_majorant(problem, a, r, eps);
        const double mismatch = std::abs(d.total - direct);
        worst_mismatch = std::max(worst_mismatch, mismatch);
        rows.push_back(Json{{"a", a},
                            {"bound_term", d.bound_term},
                            {"deficit_term", d.deficit_term},
                            {"remainder", d.remainder},
                            {"total", d.total},
                            {"direct", direct},
                            {"mismatch", mismatch}});
        report.table.rows.push_back({fmt(a), fmt(d.bound_term), fmt(d.deficit_term), fmt(d.remainder), fmt(d.total),
                                     fmt(direct), fmt(mismatch)});
    }
    report.results["rows"] = rows;
    report.results["max_mismatch"] = worst_mismatch;

    const std::vector<double> approach = {0.9, 0.99, 0.999};
    const auto ratios = quadratic_remainder_check(problem, r, approach, eps);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double q : ratios) {
        lo = std::min(lo, std::abs(q));
        hi = std::max(hi, std::abs(q));
    }
    report.results["remainder_ratios"] = Json{{"a", approach}, {"ratio", ratios}, {"spread", lo > 0.0 ? hi / lo : 0.0}};
    report.results["concavity_max_second_difference"] = concavity_check(problem, r, uniform_a_grid(101));
    report.results["passed"] = worst_mismatch <= kReconstructionLimit;
    if (worst_mismatch > kReconstructionLimit) {
        report.exit_code = kExitReconstruction;
    }
    return report;
}

RunReport cmd_selftest(const CommandOptions& o, WeightGenerator generator) {
    RunReport report;
    report.command = "selftest";
    report.seed = o.seed;
    Json suites = Json::array();
    bool all = true;
    report.table.header = {"suite", "passed", "worst", "threshold", "checks"};
    for (const auto& s : run_selftest(o.seed, generator)) {
        suites.push_back(Json{{"name", s.name},
                              {"passed", s.passed},
                              {"worst", s.worst},
                              {"threshold", s.threshold},
                              {"checks", s.checks}});
        report.table.rows.push_back(
            {s.name, s.passed ? "true" : "false", fmt(s.worst), fmt(s.threshold), std::to_string(s.checks)});
        all = all && s.passed;
    }
    report.results["suites"] = suites;
    report.results["passed"] = all;
    report.exit_code = all ? kExitOk : kExitFailure;
    return report;
}

}  // namespace bohr
