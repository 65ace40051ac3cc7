#include "funceq/approx.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "funceq/errors.hpp"
#include "funceq/grid_function.hpp"

namespace funceq {

namespace {

constexpr double kRegionTolerance = 1e-12;
constexpr double kGoldenTolerance = 1e-10;
constexpr double kUpperEnd = -1.0 - 1e-6;

void require_ordered(double alpha, double beta) {
    if (!(alpha > 0.0 && beta < 1.0 && alpha <= beta)) {
        std::ostringstream msg;
        msg << "quadratic approximation needs 0 < alpha <= beta < 1 (got alpha=" << alpha
            << ", beta=" << beta << ")";
        throw DomainError(msg.str());
    }
}

void require_b(double b) {
    if (!(b < -1.0)) {
        std::ostringstream msg;
        msg << "residue requires b < -1 (got b=" << b << ")";
        throw DomainError(msg.str());
    }
}

// Linear factor of the defect: c1 x + c0.
double slope_coeff(double alpha, double beta) {
    return beta * beta - alpha * alpha;
}

double offset_coeff(double alpha, double beta, double b) {
    return 1.0 - (2.0 + b) * alpha + alpha * alpha + b * beta;
}

double true_residue(double alpha, double beta, double b, std::size_t n) {
    std::vector<double> sq(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n);
        const double d = residue_direct(alpha, beta, b, x);
        sq[i] = d * d;
    }
    return std::sqrt(trapezoid(sq));
}

struct Minimum {
    double x;
    double value;
};

Minimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

}  // namespace

std::string_view to_string(QuadraticKind k) {
    switch (k) {
        case QuadraticKind::suboptimal_closed_form: return "suboptimal_closed_form";
        case QuadraticKind::numeric_optimal: return "numeric_optimal";
        case QuadraticKind::identity: return "identity";
    }
    return "?";
}

double QuadraticApprox::operator()(double x) const {
    return quadratic_eval(*this, x);
}

bool admissible_region(double alpha, double beta) {
    return alpha * alpha + (beta - 2.0) * (beta - 2.0) >= 2.0 - kRegionTolerance;
}

QuadraticApprox suboptimal_b(double alpha, double beta) {
    require_ordered(alpha, beta);
    if (alpha == beta) {
        throw SingularityError(
            "closed-form b is singular at alpha == beta; the exact solution there is the identity f(x) = x");
    }
    QuadraticApprox q;
    q.alpha = alpha;
    q.beta = beta;
    q.b = -((2.0 - alpha) * (2.0 - alpha) + beta * beta - 2.0) / (2.0 * (beta - alpha));
    q.kind = QuadraticKind::suboptimal_closed_form;
    q.admissible = admissible_region(alpha, beta);
    return q;
}

QuadraticApprox closed_form_approximation(double alpha, double beta) {
    require_ordered(alpha, beta);
    if (alpha == beta) {
        QuadraticApprox q;
        q.alpha = alpha;
        q.beta = beta;
        q.b = -std::numeric_limits<double>::infinity();
        q.kind = QuadraticKind::identity;
        q.admissible = true;
        return q;
    }
    return suboptimal_b(alpha, beta);
}

double quadratic_eval(const QuadraticApprox& q, double x) {
    if (q.kind == QuadraticKind::identity) {
        return x;
    }
    if (q.b == -1.0) {
        throw SingularityError("quadratic x(x+b)/(1+b) is undefined at b = -1");
    }
    return x * (x + q.b) / (1.0 + q.b);
}

double residue_pointwise(double alpha, double beta, double b, double x) {
    require_b(b);
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("residue point outside [0,1]");
    }
    const double linear = slope_coeff(alpha, beta) * x + offset_coeff(alpha, beta, b);
    return x * (1.0 - x) / (-b - 1.0) * linear;
}

double residue_direct(double alpha, double beta, double b, double x) {
    require_b(b);
    const auto q = [b](double t) { return t * (t + b) / (1.0 + b); };
    return q(x) - (x * q(alpha * x + 1.0 - alpha) + (1.0 - x) * q(beta * x));
}

double residue_majorant(double alpha, double beta, double b) {
    // Moments of x^2 (1-x)^2 against 1, x, x^2: 1/30, 1/60, 1/105.
    const double c1 = slope_coeff(alpha, beta);
    const double c0 = offset_coeff(alpha, beta, b);
    return c1 * c1 / 105.0 + c1 * c0 / 30.0 + c0 * c0 / 30.0;
}

double residue_majorant_derivative(double alpha, double beta, double b) {
    const double c1 = slope_coeff(alpha, beta);
    const double c0 = offset_coeff(alpha, beta, b);
    return (beta - alpha) * (c1 + 2.0 * c0) / 30.0;
}

double global_residue_bound() {
    const double s = 2.0 - std::numbers::sqrt2;
    return s * s / (2.0 * std::sqrt(210.0));
}

ResidueReport residue_l2(double alpha, double beta, double b, std::size_t quad_intervals) {
    require_b(b);
    if (quad_intervals < 2) {
        throw ShapeError("residue quadrature needs at least 2 intervals");
    }
    ResidueReport r;
    r.l2_residue_true = true_residue(alpha, beta, b, quad_intervals);
    r.l2_residue_estimate = std::sqrt(residue_majorant(alpha, beta, b));
    r.analytic_at_bc = (beta * beta - alpha * alpha) / std::sqrt(840.0);
    const double worst_beta = 2.0 - std::sqrt(2.0 - alpha * alpha);
    r.bound_for_alpha = (worst_beta * worst_beta - alpha * alpha) / std::sqrt(840.0);
    r.global_bound = global_residue_bound();
    return r;
}

QuadraticApprox optimal_b(double alpha, double beta, std::size_t quad_intervals) {
    require_ordered(alpha, beta);
    if (alpha == beta) {
        throw SingularityError("optimal quadratic is not defined at alpha == beta; f(x) = x is exact");
    }
    if (quad_intervals < 2) {
        throw ShapeError("residue quadrature needs at least 2 intervals");
    }
    const auto objective = [&](double b) { return true_residue(alpha, beta, b, quad_intervals); };

    double lo = -64.0;
    for (int expansion = 0; expansion < 40; ++expansion, lo *= 2.0) {
        const Minimum m = golden_section(objective, lo, kUpperEnd, kGoldenTolerance);
        if (m.x - lo <= 1e-6 * std::abs(lo)) {
            continue;  // minimum sits on the lower end; widen the bracket
        }
        const double f_lo = objective(lo);
        const double f_hi = objective(kUpperEnd);
        if (!(m.value <= f_lo && m.value <= f_hi)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "residue is not unimodal on [" << lo << ", " << kUpperEnd << "]: f(" << m.x
                << ")=" << m.value << ", f(lo)=" << f_lo << ", f(hi)=" << f_hi;
            throw OptimizationError(msg.str());
        }
        QuadraticApprox q;
        q.alpha = alpha;
        q.beta = beta;
        q.b = m.x;
        q.kind = QuadraticKind::numeric_optimal;
        q.admissible = m.x <= -2.0;
        return q;
    }
    throw OptimizationError("optimal b not bracketed after 40 expansions of the search interval");
}

double second_derivative_check(double alpha, double beta) {
    if (!(alpha < beta)) {
        throw DomainError("second derivative check needs alpha < beta");
    }
    const double exact = (beta - alpha) * (beta - alpha) / 15.0;
    const double bc = -((2.0 - alpha) * (2.0 - alpha) + beta * beta - 2.0) / (2.0 * (beta - alpha));
    const double h = 1e-4;
    const double numeric = (residue_majorant(alpha, beta, bc + h) - 2.0 * residue_majorant(alpha, beta, bc) +
                            residue_majorant(alpha, beta, bc - h)) /
                           (h * h);
    if (std::abs(numeric - exact) > 1e-6 * std::abs(exact)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "d2P/db2 mismatch at b_c=" << bc << ": closed form " << exact << ", finite difference "
            << numeric;
        throw NumericalError(msg.str());
    }
    return exact;
}

}  // namespace funceq
