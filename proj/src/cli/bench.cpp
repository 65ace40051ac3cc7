#include "funceq/cli/bench.hpp"

#include <chrono>
#include <cmath>

#include "funceq/errors.hpp"
#include "funceq/grid_function.hpp"
#include "funceq/operator.hpp"
#include "funceq/solver.hpp"

namespace funceq::cli {

namespace {

using clock_type = std::chrono::steady_clock;

double naive_recurse(const EquationSpec& spec, const RealFunction& init, std::size_t depth, double x,
                     std::uint64_t& leaves) {
    if (depth == 0) {
        ++leaves;
        return init(x);
    }
    const double w = spec.phi(x);
    return w * naive_recurse(spec, init, depth - 1, spec.phi1(x), leaves) +
           (1.0 - w) * naive_recurse(spec, init, depth - 1, spec.phi2(x), leaves);
}

// Mean wall time of `work`, repeating it until `budget` seconds have passed.
template <typename Work>
double timed(Work&& work, double budget) {
    std::size_t reps = 0;
    const auto start = clock_type::now();
    double elapsed = 0.0;
    do {
        work();
        ++reps;
        elapsed = std::chrono::duration<double>(clock_type::now() - start).count();
    } while (elapsed < budget);
    return elapsed / static_cast<double>(reps);
}

}  // namespace

NaiveValue naive_iterate(const EquationSpec& spec, const RealFunction& init, std::size_t depth, double x) {
    if (depth > kMaxBenchDepth) {
        throw DomainError("naive recursion depth " + std::to_string(depth) + " exceeds the guard of " +
                          std::to_string(kMaxBenchDepth));
    }
    NaiveValue out;
    out.value = naive_recurse(spec, init, depth, x, out.leaves);
    return out;
}

BenchReport run_cost_benchmark(const EquationSpec& spec, const RealFunction& init, const BenchOptions& options) {
    if (options.max_depth > kMaxBenchDepth) {
        throw DomainError("--max-depth " + std::to_string(options.max_depth) + " exceeds the guard of " +
                          std::to_string(kMaxBenchDepth));
    }
    if (options.min_depth < 1 || options.min_depth + 2 > options.max_depth) {
        throw DomainError("benchmark needs 1 <= min_depth and at least 3 depths");
    }

    const GridFunction start = sample_admissible(init, options.grid_n);
    const DiscreteOperator op(spec, options.grid_n);

    BenchReport report;
    report.leaf_counts_exact = true;
    volatile double sink = 0.0;
    for (std::size_t n = options.min_depth; n <= options.max_depth; ++n) {
        BenchRow row;
        row.n = n;
        row.seconds = timed(
            [&] {
                const NaiveValue v = naive_iterate(spec, init, n, options.x0);
                row.leaf_count = v.leaves;
                sink = sink + v.value;
            },
            options.min_seconds_per_point);
        row.grid_seconds = timed(
            [&] {
                GridFunction f = start;
                for (std::size_t k = 0; k < n; ++k) {
                    f = op.apply(f);
                }
                sink = sink + f[f.size() / 2];
            },
            options.min_seconds_per_point);
        report.leaf_counts_exact = report.leaf_counts_exact && row.leaf_count == (std::uint64_t{1} << n);
        report.rows.push_back(row);
    }

    std::vector<double> depth, seconds, log_depth, grid_seconds;
    for (const auto& r : report.rows) {
        depth.push_back(static_cast<double>(r.n));
        seconds.push_back(r.seconds);
        log_depth.push_back(std::log(static_cast<double>(r.n)));
        grid_seconds.push_back(r.grid_seconds);
    }
    const ExpFit naive_fit = fit_exponential(depth, seconds);
    report.time_base = naive_fit.ratio;
    report.time_base_r_squared = naive_fit.r_squared;
    // Fitting log(grid_seconds) against log(n) gives the power-law exponent as the slope.
    report.grid_loglog_exponent = -fit_exponential(log_depth, grid_seconds).rate;
    return report;
}

}  // namespace funceq::cli
