#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "funceq/equation_spec.hpp"

namespace funceq {

// Monte-Carlo cross-check for the fixed point. The chain moves
// x -> phi1(x) with probability phi(x) and x -> phi2(x) otherwise; any
// bounded solution of the equation is harmonic for it, so the fixed point
// at x is the probability of absorption near 1. This is a validation tool,
// not a definition of the solution.

struct ChainConfig {
    double absorption_eps = 1e-9;
    std::size_t max_steps = 10000;
    std::uint64_t base_seed = 0x5eed5eed5eed5eedULL;

    void validate() const;
};

enum class PathOutcome { absorbed_one, absorbed_zero, timeout };

std::string_view to_string(PathOutcome o);

struct OracleEstimate {
    double x = 0.0;
    double p_hat = 0.0;
    std::size_t samples = 0;
    double ci_halfwidth = 0.0;  // normal approximation, 99%
    std::size_t timeouts = 0;
};

/// splitmix64 finaliser applied to base + (index + 1) * 0x9E3779B97F4A7C15.
/// For a fixed base this is a bijection of the path index.
std::uint64_t path_seed(std::uint64_t base_seed, std::uint64_t path_index);

PathOutcome simulate_path(const EquationSpec& spec, double x0, const ChainConfig& cfg,
                          std::uint64_t seed);

/// Fraction of `samples` paths absorbed near 1. Paths are split across
/// `workers` threads; the result does not depend on the worker count.
/// Throws ReliabilityError when more than 10% of the paths time out.
OracleEstimate estimate(const EquationSpec& spec, double x, std::size_t samples,
                        const ChainConfig& cfg, unsigned workers = 1);

}  // namespace funceq
