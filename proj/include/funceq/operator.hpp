#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "funceq/equation_spec.hpp"
#include "funceq/grid_function.hpp"

namespace funceq {

/// Tolerance for the hypotheses phi(0)=0, phi(1)=1, phi1(1)=1, phi2(0)=0.
inline constexpr double kBoundaryTolerance = 1e-12;
/// phi1, phi2 outputs within this band outside [0,1] are clamped, not rejected.
inline constexpr double kRangeTolerance = 1e-12;

/**
 * The operator Tf = phi (f o phi1) + (1 - phi) (f o phi2) restricted to a
 * fixed grid.
 *
 * Coefficient values at the nodes are evaluated once at construction, so
 * repeated application (Picard iteration) only interpolates. Evaluation
 * failures and range violations are reported with the offending node.
 */
class DiscreteOperator {
public:
    DiscreteOperator(const EquationSpec& spec, std::size_t n_intervals);

    std::size_t intervals() const noexcept { return weight_.size() - 1; }

    /// Requires an admissible f on the same grid; the result is admissible.
    GridFunction apply(const GridFunction& f) const;

private:
    std::vector<double> weight_;
    std::vector<double> target1_;
    std::vector<double> target2_;
};

GridFunction apply_T(const EquationSpec& spec, const GridFunction& f);

namespace detail {

/// Calls fn(x); exceptions and non-finite results are rethrown as
/// EvaluationError naming the coefficient and node.
double evaluate_coefficient(const RealFunction& fn, std::string_view name, double x,
                            std::size_t node);

}  // namespace detail

}  // namespace funceq
