#include "funceq/exact_family.hpp"

#include <cmath>
#include <sstream>

#include "funceq/errors.hpp"
#include "funceq/operator.hpp"

namespace funceq {

namespace {

constexpr std::size_t kDenominatorSamples = 4096;

double denominator(const ExactFamilyParams& p, double x) {
    return std::pow(p.alpha * x + 1.0 - p.alpha, p.m) - std::pow(p.beta * x, p.m);
}

}  // namespace

void ExactFamilyParams::validate() const {
    if (!(alpha > 0.0 && alpha <= beta && beta < 1.0 && m > 0.0 && std::isfinite(m))) {
        std::ostringstream msg;
        msg << "exact family needs 0 < alpha <= beta < 1 and m > 0 (got alpha=" << alpha
            << ", beta=" << beta << ", m=" << m << ")";
        throw DomainError(msg.str());
    }
}

double phi_m(const ExactFamilyParams& p, double x) {
    if (x <= 0.0) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    return (1.0 - std::pow(p.beta, p.m)) * std::pow(x, p.m) / denominator(p, x);
}

EquationSpec build_spec(const ExactFamilyParams& p) {
    p.validate();
    for (std::size_t i = 0; i <= kDenominatorSamples; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(kDenominatorSamples);
        if (!(denominator(p, x) > 0.0)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "phi_m denominator is not positive at x=" << x;
            throw ConstructionError(msg.str());
        }
    }
    EquationSpec spec;
    spec.phi = [p](double x) { return phi_m(p, x); };
    spec.phi1 = [alpha = p.alpha](double x) { return 1.0 - alpha * (1.0 - x); };
    spec.phi2 = [beta = p.beta](double x) { return beta * x; };
    spec.family = ExactFamily{p.alpha, p.beta, p.m};
    return spec;
}

GridFunction exact_solution(double m, std::size_t grid_n) {
    if (!(m > 0.0)) {
        throw DomainError("exact solution x^m needs m > 0");
    }
    return GridFunction::sample([m](double x) { return x == 0.0 ? 0.0 : std::pow(x, m); }, grid_n);
}

std::vector<double> true_error_series(const ExactFamilyParams& p, const GridFunction& f0,
                                      std::size_t iters, Metric metric) {
    const EquationSpec spec = build_spec(p);
    const GridFunction exact = exact_solution(p.m, f0.intervals());
    const DiscreteOperator op(spec, f0.intervals());
    std::vector<double> errors;
    errors.reserve(iters + 1);
    GridFunction current = f0;
    errors.push_back(distance(exact, current, metric));
    for (std::size_t n = 1; n <= iters; ++n) {
        current = op.apply(current);
        errors.push_back(distance(exact, current, metric));
    }
    return errors;
}

}  // namespace funceq
