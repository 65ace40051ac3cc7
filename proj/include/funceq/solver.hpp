#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "funceq/equation_spec.hpp"
#include "funceq/grid_function.hpp"

namespace funceq {

struct IterationRecord {
    std::size_t n = 0;  // index of the iterate f^n, starting at 1
    double d_sup = 0.0;
    double d_l2 = 0.0;
    double d_lip = 0.0;
    double seconds = 0.0;

    double distance(Metric m) const noexcept;
};

enum class StopReason { tolerance, max_iterations };

std::string_view to_string(StopReason r);

/// Distances between consecutive Picard iterates f^n and f^{n-1}.
struct ConvergenceHistory {
    std::vector<IterationRecord> records;
    StopReason stop_reason = StopReason::max_iterations;
    std::vector<std::string> warnings;
    double contraction_constant = 0.0;
    bool guaranteed = false;
};

struct SolveOptions {
    double tol = 1e-10;
    std::size_t max_iter = 200;
    Metric stop_metric = Metric::l2;
};

struct SolveResult {
    GridFunction solution;
    ConvergenceHistory history;
};

/// Picard iteration f^n = T f^{n-1} from an admissible f0 until the stop
/// metric distance falls below tol or max_iter applications are done.
/// Specs without a contraction certificate still run; a warning is
/// recorded in the history.
SolveResult solve(const EquationSpec& spec, const GridFunction& f0, const SolveOptions& options = {});

/// Exactly n applications of T, no stopping test.
GridFunction iterate(const EquationSpec& spec, const GridFunction& f0, std::size_t n);

/// d ~ amplitude * exp(-rate * n).
struct ExpFit {
    double amplitude = 0.0;
    double rate = 0.0;
    double ratio = 0.0;  // exp(-rate)
    double r_squared = 0.0;
};

/// Least-squares line through (n, log d) over the records after skip_first.
ExpFit fit_exponential(const ConvergenceHistory& history, Metric metric, std::size_t skip_first = 2);

/// Same fit over an arbitrary series, with indices[i] paired to values[i].
ExpFit fit_exponential(std::span<const double> indices, std::span<const double> values);

double residual(const EquationSpec& spec, const GridFunction& f, Metric metric);

}  // namespace funceq
