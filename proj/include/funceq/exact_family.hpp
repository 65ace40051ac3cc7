#pragma once

#include <cstddef>
#include <vector>

#include "funceq/equation_spec.hpp"
#include "funceq/grid_function.hpp"

namespace funceq {

/// Parameters of the family whose solution is x^m for every alpha, beta.
struct ExactFamilyParams {
    double alpha = 0.3;
    double beta = 0.7;
    double m = 1.0;

    /// Throws DomainError unless 0 < alpha <= beta < 1 and m > 0.
    void validate() const;
};

/// phi_m(x) = (1 - beta^m) x^m / ((alpha x + 1 - alpha)^m - beta^m x^m),
/// extended by phi_m(0) = 0, phi_m(1) = 1.
double phi_m(const ExactFamilyParams& p, double x);

/// Spec with phi = phi_m, phi1 = alpha x + 1 - alpha, phi2 = beta x.
EquationSpec build_spec(const ExactFamilyParams& p);

GridFunction exact_solution(double m, std::size_t grid_n);

/// distance(x^m, f^n, metric) for n = 0..iters, f^0 = f0.
std::vector<double> true_error_series(const ExactFamilyParams& p, const GridFunction& f0,
                                      std::size_t iters, Metric metric);

}  // namespace funceq
