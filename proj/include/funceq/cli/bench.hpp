#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "funceq/equation_spec.hpp"

namespace funceq::cli {

inline constexpr std::size_t kMaxBenchDepth = 26;

struct NaiveValue {
    double value = 0.0;
    std::uint64_t leaves = 0;
};

/// F^n(x) = phi(x) F^{n-1}(phi1(x)) + (1 - phi(x)) F^{n-1}(phi2(x)) by plain
/// recursion down to F^0 = init, counting evaluations of init.
NaiveValue naive_iterate(const EquationSpec& spec, const RealFunction& init, std::size_t depth, double x);

struct BenchRow {
    std::size_t n = 0;
    std::uint64_t leaf_count = 0;
    double seconds = 0.0;       // naive recursion for F^n(x0)
    double grid_seconds = 0.0;  // n grid applications of T
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double time_base = 0.0;  // seconds ~ C * time_base^n
    double time_base_r_squared = 0.0;
    double grid_loglog_exponent = 0.0;  // grid_seconds ~ C * n^k
    bool leaf_counts_exact = false;     // leaf_count == 2^n for every row
};

struct BenchOptions {
    std::size_t min_depth = 10;
    std::size_t max_depth = 22;
    std::size_t grid_n = 2048;
    double x0 = 0.5;
    double min_seconds_per_point = 0.02;  // repeat short runs up to this budget
};

/// Throws DomainError when max_depth exceeds kMaxBenchDepth.
BenchReport run_cost_benchmark(const EquationSpec& spec, const RealFunction& init, const BenchOptions& options);

}  // namespace funceq::cli
