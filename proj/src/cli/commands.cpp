#include "funceq/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "funceq/approx.hpp"
#include "funceq/certify.hpp"
#include "funceq/cli/bench.hpp"
#include "funceq/cli/csv.hpp"
#include "funceq/cli/spec_file.hpp"
#include "funceq/errors.hpp"
#include "funceq/expr.hpp"
#include "funceq/mc_oracle.hpp"
#include "funceq/solver.hpp"

#ifndef FUNCEQ_VERSION
#define FUNCEQ_VERSION "dev"
#endif

namespace funceq::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kDefaultGrid = 2048;

struct CheckArgs {
    std::string spec_path;
    std::optional<std::size_t> grid;
};

struct SolveArgs {
    std::string spec_path;
    std::optional<std::size_t> grid;
    std::optional<double> tol;
    std::optional<std::size_t> max_iter;
    std::optional<std::string> metric;
    std::string init = "x";
    std::string out;
    std::string history;
    bool fit = false;
    std::size_t fit_skip = 2;
};

struct ApproxArgs {
    double alpha = 0.0;
    double beta = 0.0;
    bool optimal = false;
    std::size_t proxy_iters = 0;
    std::size_t grid = kDefaultGrid;
    std::string out;
};

struct OracleArgs {
    std::string spec_path;
    std::vector<double> points;
    std::size_t samples = 100000;
    std::uint64_t seed = ChainConfig{}.base_seed;
    unsigned workers = 1;
    double eps = ChainConfig{}.absorption_eps;
    std::size_t max_steps = ChainConfig{}.max_steps;
    std::optional<std::size_t> grid;
    std::string out;
};

struct BenchArgs {
    std::string spec_path;
    std::size_t max_depth = 22;
    std::size_t min_depth = 10;
    std::string init = "x";
    std::size_t grid = kDefaultGrid;
    std::string out;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json report_header(const std::string& command) {
    ordered_json j;
    j["command"] = command;
    j["version"] = FUNCEQ_VERSION;
    return j;
}

ordered_json norm_json(const NormValue& v) {
    return ordered_json{{"value", v.value}, {"source", std::string(to_string(v.source))}};
}

ordered_json certificate_json(const ContractionReport& r) {
    ordered_json j;
    j["boundary"] = ordered_json{{"phi(0)=0", r.boundary.phi_at_0},
                                 {"phi(1)=1", r.boundary.phi_at_1},
                                 {"phi1(1)=1", r.boundary.phi1_at_1},
                                 {"phi2(0)=0", r.boundary.phi2_at_0}};
    j["boundary_failures"] = r.boundary.failures();
    j["range_ok"] = r.range_ok;
    j["norm_phi"] = norm_json(r.norm_phi);
    j["norm_phi1"] = norm_json(r.norm_phi1);
    j["norm_phi2"] = norm_json(r.norm_phi2);
    j["phi1_at_0"] = norm_json(r.phi1_at_0);
    j["contraction_constant"] = r.contraction_constant;
    j["operator_norm_bound"] = r.operator_norm_bound;
    j["guaranteed"] = r.guaranteed;
    j["lemma_max_deviation"] = r.lemma_max_deviation;
    j["lemma_ok"] = r.lemma_ok;
    if (r.norm_phi.source == NormSource::grid_estimate) {
        j["note"] = "norms are grid estimates (lower bounds); the verdict is heuristic";
    }
    return j;
}

ordered_json fit_json(const ExpFit& f) {
    return ordered_json{{"amplitude", f.amplitude},
                        {"rate", f.rate},
                        {"ratio", f.ratio},
                        {"r_squared", f.r_squared}};
}

ordered_json spec_input_json(const SpecFile& spec) {
    ordered_json j;
    j["spec"] = to_json(spec);
    const auto sub = substituted_expressions(spec);
    if (!sub.empty()) {
        j["substituted"] = sub;
    }
    return j;
}

expr::Expr parse_flag_expression(const std::string& flag, const std::string& text) {
    try {
        return expr::parse(text);
    } catch (const expr::ParseError& e) {
        throw InputError(flag + " \"" + text + "\": " + e.what());
    }
}

RealFunction as_function(expr::Expr e) {
    return [e = std::move(e)](double x) { return e(x); };
}

std::size_t resolve_grid(const std::optional<std::size_t>& flag, const SpecFile& spec) {
    const std::size_t n = flag.value_or(spec.grid_n.value_or(kDefaultGrid));
    if (n < 2) {
        throw InputError("grid must have at least 2 intervals");
    }
    return n;
}

void emit(std::ostream& out, const ordered_json& report) {
    out << report.dump(2) << '\n';
}

// Runs a command body and maps escaping exceptions to exit codes.
template <typename Body>
int guarded(const std::string& command, std::ostream& out, std::ostream& err, Body&& body) {
    const auto fail = [&](const char* kind, const std::exception& e, int code) {
        ordered_json j = report_header(command);
        j["status"] = "error";
        j["error"] = ordered_json{{"kind", kind}, {"message", e.what()}};
        emit(out, j);
        err << "funceq " << command << ": " << e.what() << '\n';
        return code;
    };
    try {
        return body();
    } catch (const InputError& e) {
        return fail("invalid_input", e, kExitInvalidInput);
    } catch (const NumericalError& e) {
        return fail("numerical_failure", e, kExitNumericalFailure);
    } catch (const std::exception& e) {
        return fail("runtime_failure", e, kExitNumericalFailure);
    }
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    const Stopwatch clock;
    const SpecFile spec_file = load_spec_file(args.spec_path);
    const EquationSpec spec = to_equation(spec_file);
    const ContractionReport cert = certify(spec, resolve_grid(args.grid, spec_file));

    int code = kExitOk;
    std::string status = "guaranteed";
    if (!cert.hypotheses_ok()) {
        code = kExitInvalidInput;
        status = "invalid_spec";
        for (const auto& f : cert.boundary.failures()) {
            err << "funceq check: hypothesis " << f << " fails\n";
        }
        if (!cert.range_ok) {
            err << "funceq check: phi1 or phi2 leaves [0,1]\n";
        }
    } else if (!cert.guaranteed) {
        code = kExitUnguaranteed;
        status = "not_guaranteed";
    }

    ordered_json j = report_header("check");
    j["status"] = status;
    j["input"] = spec_input_json(spec_file);
    j["family"] = describe(spec.family);
    j["certificate"] = certificate_json(cert);
    j["wall_clock_seconds"] = clock.seconds();
    emit(out, j);
    return code;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream&) {
    const Stopwatch clock;
    const SpecFile spec_file = load_spec_file(args.spec_path);
    const EquationSpec spec = to_equation(spec_file);
    const std::size_t grid = resolve_grid(args.grid, spec_file);

    SolveOptions options;
    options.tol = args.tol.value_or(spec_file.tol.value_or(options.tol));
    options.max_iter = args.max_iter.value_or(spec_file.max_iter.value_or(options.max_iter));
    options.stop_metric = args.metric ? parse_metric(*args.metric) : spec_file.metric.value_or(options.stop_metric);
    if (!(options.tol > 0.0) || options.max_iter == 0) {
        throw InputError("--tol must be positive and --max-iter at least 1");
    }

    const expr::Expr init = parse_flag_expression("--init", args.init);
    const GridFunction f0 = sample_admissible(as_function(init), grid);
    const ContractionReport cert = certify(spec, grid);
    const SolveResult result = solve(spec, f0, options);

    if (!args.out.empty()) {
        CsvTable table({"x", "f"});
        for (std::size_t i = 0; i < result.solution.size(); ++i) {
            table.row({format_real(result.solution.node(i)), format_real(result.solution[i])});
        }
        table.write(args.out);
    }
    if (!args.history.empty()) {
        CsvTable table({"n", "d_sup", "d_l2", "d_lip", "seconds"});
        for (const auto& r : result.history.records) {
            table.row({std::to_string(r.n), format_real(r.d_sup), format_real(r.d_l2), format_real(r.d_lip),
                       format_real(r.seconds)});
        }
        table.write(args.history);
    }

    ordered_json j = report_header("solve");
    j["status"] = "ok";
    ordered_json input = spec_input_json(spec_file);
    input["init"] = args.init;
    input["grid_n"] = grid;
    input["tol"] = options.tol;
    input["max_iter"] = options.max_iter;
    input["metric"] = std::string(to_string(options.stop_metric));
    j["input"] = input;
    j["family"] = describe(spec.family);
    j["certificate"] = certificate_json(cert);

    ordered_json solver;
    solver["iterations"] = result.history.records.size();
    solver["stop_reason"] = std::string(to_string(result.history.stop_reason));
    solver["final_step"] = result.history.records.empty()
                               ? ordered_json()
                               : ordered_json{{"sup", result.history.records.back().d_sup},
                                              {"l2", result.history.records.back().d_l2},
                                              {"lip", result.history.records.back().d_lip}};
    solver["final_residual"] = ordered_json{{"sup", residual(spec, result.solution, Metric::sup)},
                                            {"l2", residual(spec, result.solution, Metric::l2)},
                                            {"lip", residual(spec, result.solution, Metric::lip)}};
    solver["warnings"] = result.history.warnings;
    double iteration_seconds = 0.0;
    for (const auto& r : result.history.records) iteration_seconds += r.seconds;
    solver["iteration_seconds"] = iteration_seconds;
    j["solver"] = solver;

    if (args.fit) {
        try {
            const ExpFit fit = fit_exponential(result.history, options.stop_metric, args.fit_skip);
            ordered_json fj = fit_json(fit);
            fj["metric"] = std::string(to_string(options.stop_metric));
            fj["skip_first"] = args.fit_skip;
            j["fit"] = fj;
        } catch (const NumericalError& e) {
            j["fit"] = ordered_json{{"error", e.what()}};
        }
    }
    ordered_json outputs = ordered_json::object();
    if (!args.out.empty()) outputs["solution"] = args.out;
    if (!args.history.empty()) outputs["history"] = args.history;
    j["outputs"] = outputs;
    j["wall_clock_seconds"] = clock.seconds();
    emit(out, j);
    return kExitOk;
}

int cmd_approx(const ApproxArgs& args, std::ostream& out, std::ostream& err) {
    const Stopwatch clock;
    if (!(args.alpha > 0.0 && args.beta < 1.0)) {
        throw InputError("approx needs 0 < alpha < beta < 1");
    }
    if (args.alpha >= args.beta) {
        throw InputError(args.alpha == args.beta
                             ? "alpha == beta: the exact solution is the identity f(x) = x, no quadratic is needed"
                             : "approx needs alpha < beta (at alpha == beta the solution is the identity f(x) = x)");
    }
    if (args.grid < 2) {
        throw InputError("--grid must be at least 2");
    }

    const QuadraticApprox q = suboptimal_b(args.alpha, args.beta);
    const ResidueReport res = residue_l2(args.alpha, args.beta, q.b, args.grid);

    ordered_json j = report_header("approx");
    j["status"] = "ok";
    j["input"] = ordered_json{{"alpha", args.alpha},
                              {"beta", args.beta},
                              {"optimal", args.optimal},
                              {"proxy_iters", args.proxy_iters},
                              {"grid_n", args.grid}};
    ordered_json quad;
    quad["b"] = q.b;
    quad["admissible"] = q.admissible;
    quad["region_value"] = args.alpha * args.alpha + (args.beta - 2.0) * (args.beta - 2.0);
    quad["second_derivative_at_bc"] = second_derivative_check(args.alpha, args.beta);
    quad["residue"] = ordered_json{{"l2_true", res.l2_residue_true},
                                   {"l2_estimate", res.l2_residue_estimate},
                                   {"analytic_at_bc", res.analytic_at_bc},
                                   {"bound_for_alpha", res.bound_for_alpha},
                                   {"global_bound", res.global_bound}};
    std::vector<std::string> warnings;
    if (!q.admissible) {
        warnings.emplace_back("alpha^2 + (beta-2)^2 < 2: b > -2, the quadratic is not increasing on [0,1]");
        err << "funceq approx: warning: " << warnings.back() << '\n';
    }
    quad["warnings"] = warnings;
    j["quadratic"] = quad;

    std::optional<QuadraticApprox> opt;
    if (args.optimal) {
        opt = optimal_b(args.alpha, args.beta, args.grid);
        const ResidueReport opt_res = residue_l2(args.alpha, args.beta, opt->b, args.grid);
        j["optimal"] = ordered_json{{"b", opt->b},
                                    {"admissible", opt->admissible},
                                    {"l2_true", opt_res.l2_residue_true}};
    }

    const GridFunction f_tilde = GridFunction::sample([&](double x) { return q(x); }, args.grid);
    std::optional<GridFunction> f_opt;
    if (opt) {
        f_opt = GridFunction::sample([&](double x) { return (*opt)(x); }, args.grid);
    }
    std::optional<GridFunction> proxy;
    if (args.proxy_iters > 0) {
        proxy = iterate(paradise(args.alpha, args.beta), GridFunction::identity(args.grid), args.proxy_iters);
        ordered_json pj;
        pj["iterations"] = args.proxy_iters;
        pj["f_tilde"] = ordered_json{{"sup", distance(f_tilde, *proxy, Metric::sup)},
                                     {"l2", distance(f_tilde, *proxy, Metric::l2)}};
        if (f_opt) {
            pj["f_opt"] = ordered_json{{"sup", distance(*f_opt, *proxy, Metric::sup)},
                                       {"l2", distance(*f_opt, *proxy, Metric::l2)}};
        }
        j["proxy"] = pj;
    }

    if (!args.out.empty()) {
        std::vector<std::string> header = {"x", "f_tilde"};
        if (f_opt) header.emplace_back("f_opt");
        if (proxy) header.emplace_back("f_proxy");
        CsvTable table(header);
        for (std::size_t i = 0; i < f_tilde.size(); ++i) {
            std::vector<std::string> row = {format_real(f_tilde.node(i)), format_real(f_tilde[i])};
            if (f_opt) row.push_back(format_real((*f_opt)[i]));
            if (proxy) row.push_back(format_real((*proxy)[i]));
            table.row(row);
        }
        table.write(args.out);
        j["outputs"] = ordered_json{{"curves", args.out}};
    }
    j["wall_clock_seconds"] = clock.seconds();
    emit(out, j);
    return kExitOk;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream&) {
    const Stopwatch clock;
    const SpecFile spec_file = load_spec_file(args.spec_path);
    const EquationSpec spec = to_equation(spec_file);
    const std::size_t grid = resolve_grid(args.grid, spec_file);

    std::vector<double> points = args.points;
    if (points.empty()) {
        for (int i = 1; i <= 20; ++i) points.push_back(static_cast<double>(i) / 21.0);
    }
    for (double x : points) {
        if (!(x >= 0.0 && x <= 1.0)) throw InputError("--points entries must lie in [0,1]");
    }

    ChainConfig cfg;
    cfg.absorption_eps = args.eps;
    cfg.max_steps = args.max_steps;
    cfg.base_seed = args.seed;
    cfg.validate();

    SolveOptions options;
    options.tol = spec_file.tol.value_or(options.tol);
    options.max_iter = spec_file.max_iter.value_or(options.max_iter);
    options.stop_metric = spec_file.metric.value_or(options.stop_metric);
    const SolveResult reference = solve(spec, GridFunction::identity(grid), options);

    CsvTable table({"x", "p_hat", "ci", "timeouts"});
    ordered_json rows = ordered_json::array();
    double max_discrepancy = 0.0;
    std::size_t outside = 0;
    for (double x : points) {
        const OracleEstimate e = estimate(spec, x, args.samples, cfg, args.workers);
        const double f = reference.solution(x);
        const double gap = std::abs(e.p_hat - f);
        max_discrepancy = std::max(max_discrepancy, gap);
        if (gap > 3.0 * e.ci_halfwidth) ++outside;
        table.row({format_real(x), format_real(e.p_hat), format_real(e.ci_halfwidth), std::to_string(e.timeouts)});
        rows.push_back(ordered_json{{"x", x},
                                    {"p_hat", e.p_hat},
                                    {"ci", e.ci_halfwidth},
                                    {"timeouts", e.timeouts},
                                    {"solver", f},
                                    {"discrepancy", gap}});
    }
    if (!args.out.empty()) {
        table.write(args.out);
    }

    ordered_json j = report_header("oracle");
    j["status"] = "ok";
    ordered_json input = spec_input_json(spec_file);
    input["samples"] = args.samples;
    input["seed"] = args.seed;
    input["workers"] = args.workers;
    input["absorption_eps"] = cfg.absorption_eps;
    input["max_steps"] = cfg.max_steps;
    input["grid_n"] = grid;
    j["input"] = input;
    j["family"] = describe(spec.family);
    j["estimates"] = rows;
    j["max_discrepancy"] = max_discrepancy;
    j["points_outside_3ci"] = outside;
    j["solver_iterations"] = reference.history.records.size();
    if (!args.out.empty()) j["outputs"] = ordered_json{{"estimates", args.out}};
    j["wall_clock_seconds"] = clock.seconds();
    emit(out, j);
    return kExitOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream&) {
    const Stopwatch clock;
    if (args.max_depth > kMaxBenchDepth) {
        throw InputError("--max-depth " + std::to_string(args.max_depth) + " exceeds the limit of " +
                         std::to_string(kMaxBenchDepth));
    }
    if (args.min_depth < 1 || args.min_depth + 2 > args.max_depth) {
        throw InputError("--min-depth must be at least 1 and at least 2 below --max-depth");
    }
    const SpecFile spec_file = load_spec_file(args.spec_path);
    const EquationSpec spec = to_equation(spec_file);
    const expr::Expr init = parse_flag_expression("--init", args.init);

    BenchOptions options;
    options.min_depth = args.min_depth;
    options.max_depth = args.max_depth;
    options.grid_n = args.grid;
    const BenchReport report = run_cost_benchmark(spec, as_function(init), options);

    if (!args.out.empty()) {
        CsvTable table({"n", "leaf_count", "seconds", "grid_seconds"});
        for (const auto& r : report.rows) {
            table.row({std::to_string(r.n), std::to_string(r.leaf_count), format_real(r.seconds),
                       format_real(r.grid_seconds)});
        }
        table.write(args.out);
    }

    ordered_json j = report_header("bench");
    j["status"] = "ok";
    ordered_json input = spec_input_json(spec_file);
    input["init"] = args.init;
    input["min_depth"] = args.min_depth;
    input["max_depth"] = args.max_depth;
    input["grid_n"] = args.grid;
    input["x0"] = options.x0;
    j["input"] = input;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
        rows.push_back(ordered_json{
            {"n", r.n}, {"leaf_count", r.leaf_count}, {"seconds", r.seconds}, {"grid_seconds", r.grid_seconds}});
    }
    j["rows"] = rows;
    j["leaf_counts_exact"] = report.leaf_counts_exact;
    j["time_base"] = report.time_base;
    j["time_base_r_squared"] = report.time_base_r_squared;
    j["grid_loglog_exponent"] = report.grid_loglog_exponent;
    if (!args.out.empty()) j["outputs"] = ordered_json{{"timings", args.out}};
    j["wall_clock_seconds"] = clock.seconds();
    emit(out, j);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical workbench for f(x) = phi(x) f(phi1(x)) + (1 - phi(x)) f(phi2(x)) on [0,1]", "funceq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", FUNCEQ_VERSION);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Check hypotheses and the contraction certificate");
    check_cmd->add_option("spec", check.spec_path, "Spec file (JSON)")->required();
    check_cmd->add_option("--grid", check.grid, "Grid intervals for norm estimates");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Picard iteration on a uniform grid");
    solve_cmd->add_option("spec", solve_args.spec_path, "Spec file (JSON)")->required();
    solve_cmd->add_option("--grid", solve_args.grid, "Grid intervals N");
    solve_cmd->add_option("--tol", solve_args.tol, "Stop when the step distance falls below this");
    solve_cmd->add_option("--max-iter", solve_args.max_iter, "Maximum number of iterations");
    solve_cmd->add_option("--init", solve_args.init, "Initial iterate as an expression in x");
    solve_cmd->add_option("--metric", solve_args.metric, "Stopping metric: sup, l2 or lip");
    solve_cmd->add_option("--out", solve_args.out, "Solution CSV (x,f)");
    solve_cmd->add_option("--history", solve_args.history, "History CSV (n,d_sup,d_l2,d_lip,seconds)");
    solve_cmd->add_flag("--fit", solve_args.fit, "Fit an exponential to the step distances");
    solve_cmd->add_option("--fit-skip", solve_args.fit_skip, "Leading records excluded from the fit");

    ApproxArgs approx_args;
    auto* approx_cmd = app.add_subcommand("approx", "Quadratic approximation of the paradise-fish solution");
    approx_cmd->add_option("alpha", approx_args.alpha)->required();
    approx_cmd->add_option("beta", approx_args.beta)->required();
    approx_cmd->add_flag("--optimal", approx_args.optimal, "Also compute the least-squares optimal quadratic");
    approx_cmd->add_option("--proxy-iters", approx_args.proxy_iters, "Compare with the Picard iterate f^P from f0 = x");
    approx_cmd->add_option("--grid", approx_args.grid, "Grid intervals for quadrature and the proxy");
    approx_cmd->add_option("--out", approx_args.out, "Curve CSV (x,f_tilde[,f_opt][,f_proxy])");

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Monte-Carlo absorption estimate of the fixed point");
    oracle_cmd->add_option("spec", oracle_args.spec_path, "Spec file (JSON)")->required();
    oracle_cmd->add_option("--points", oracle_args.points, "Comma-separated evaluation points")->delimiter(',');
    oracle_cmd->add_option("--samples", oracle_args.samples, "Paths per point");
    oracle_cmd->add_option("--seed", oracle_args.seed, "Base seed");
    oracle_cmd->add_option("--workers", oracle_args.workers, "Worker threads");
    oracle_cmd->add_option("--eps", oracle_args.eps, "Absorption band width");
    oracle_cmd->add_option("--max-steps", oracle_args.max_steps, "Steps before a path times out");
    oracle_cmd->add_option("--grid", oracle_args.grid, "Grid intervals of the reference solve");
    oracle_cmd->add_option("--out", oracle_args.out, "Estimates CSV (x,p_hat,ci,timeouts)");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Cost of naive recursive iteration against grid iteration");
    bench_cmd->add_option("spec", bench_args.spec_path, "Spec file (JSON)")->required();
    bench_cmd->add_option("--max-depth", bench_args.max_depth, "Deepest iterate (at most 26)");
    bench_cmd->add_option("--min-depth", bench_args.min_depth, "Shallowest iterate");
    bench_cmd->add_option("--init", bench_args.init, "F^0 as an expression in x");
    bench_cmd->add_option("--grid", bench_args.grid, "Grid intervals for the grid timing");
    bench_cmd->add_option("--out", bench_args.out, "Timing CSV (n,leaf_count,seconds,grid_seconds)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    if (check_cmd->parsed()) {
        return guarded("check", out, err, [&] { return cmd_check(check, out, err); });
    }
    if (solve_cmd->parsed()) {
        return guarded("solve", out, err, [&] { return cmd_solve(solve_args, out, err); });
    }
    if (approx_cmd->parsed()) {
        return guarded("approx", out, err, [&] { return cmd_approx(approx_args, out, err); });
    }
    if (oracle_cmd->parsed()) {
        return guarded("oracle", out, err, [&] { return cmd_oracle(oracle_args, out, err); });
    }
    return guarded("bench", out, err, [&] { return cmd_bench(bench_args, out, err); });
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, std::cout, std::cerr);
}

}  // namespace funceq::cli
