#pragma once

#include <cstddef>
#include <string_view>

namespace funceq {

enum class QuadraticKind { suboptimal_closed_form, numeric_optimal, identity };

std::string_view to_string(QuadraticKind k);

/**
 * The quadratic x(x+b)/(1+b) approximating the solution of
 * f(x) = x f(alpha x + 1 - alpha) + (1 - x) f(beta x).
 *
 * It interpolates 0 at x=0 and 1 at x=1 for every b != -1; it is
 * increasing and concave on [0,1] exactly when b <= -2, which is what
 * `admissible` records. The identity kind stands for the alpha == beta
 * case, where f(x) = x solves the equation.
 */
struct QuadraticApprox {
    double b = -2.0;
    double alpha = 0.0;
    double beta = 0.0;
    QuadraticKind kind = QuadraticKind::suboptimal_closed_form;
    bool admissible = false;

    double operator()(double x) const;
};

/// b = -((2 - alpha)^2 + beta^2 - 2) / (2 (beta - alpha)), 0 < alpha < beta < 1.
/// alpha == beta throws SingularityError (the exact solution is the identity).
QuadraticApprox suboptimal_b(double alpha, double beta);

/// As suboptimal_b, but alpha == beta yields the identity instead of throwing.
QuadraticApprox closed_form_approximation(double alpha, double beta);

/// True when alpha^2 + (beta - 2)^2 >= 2, i.e. the closed-form b is <= -2.
bool admissible_region(double alpha, double beta);

double quadratic_eval(const QuadraticApprox& q, double x);

/// Signed defect q(x) - [x q(alpha x + 1 - alpha) + (1 - x) q(beta x)] in
/// the factored form x(1-x)/(-b-1) ((beta^2-alpha^2) x + 1 - (2+b) alpha + alpha^2 + b beta).
double residue_pointwise(double alpha, double beta, double b, double x);

/// The same defect by evaluating both sides of the equation directly.
double residue_direct(double alpha, double beta, double b, double x);

/// P(b) = integral over [0,1] of R(x,b)^2, R being the defect without the
/// 1/(-b-1) factor. Closed form; P is a quadratic polynomial in b.
double residue_majorant(double alpha, double beta, double b);

/// dP/db in closed form.
double residue_majorant_derivative(double alpha, double beta, double b);

struct ResidueReport {
    double l2_residue_true = 0.0;      // quadrature of the actual defect
    double l2_residue_estimate = 0.0;  // sqrt(P(b))
    double analytic_at_bc = 0.0;       // (beta^2 - alpha^2) / sqrt(840)
    double bound_for_alpha = 0.0;      // ((2 - sqrt(2 - alpha^2))^2 - alpha^2) / sqrt(840)
    double global_bound = 0.0;         // (2 - sqrt 2)^2 / (2 sqrt 210)
};

/// quad_intervals is the number of trapezoid intervals on [0,1].
ResidueReport residue_l2(double alpha, double beta, double b, std::size_t quad_intervals);

/// Quadratic minimising the true L2 residue over b < -1, found by
/// golden-section search on an expanding bracket [b_lo, -1 - 1e-6].
QuadraticApprox optimal_b(double alpha, double beta, std::size_t quad_intervals);

/// (beta - alpha)^2 / 15, cross-checked against central differences of P at b_c.
double second_derivative_check(double alpha, double beta);

double global_residue_bound();

}  // namespace funceq
