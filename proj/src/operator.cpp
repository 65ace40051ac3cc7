#include "funceq/operator.hpp"

#include <cmath>
#include <sstream>

#include "funceq/errors.hpp"

namespace funceq {

namespace detail {

double evaluate_coefficient(const RealFunction& fn, std::string_view name, double x,
                            std::size_t node) {
    double value = 0.0;
    try {
        value = fn(x);
    } catch (const std::exception& e) {
        std::ostringstream msg;
        msg.precision(17);
        msg << name << " failed at node " << node << " (x=" << x << "): " << e.what();
        throw EvaluationError(msg.str(), x);
    }
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << name << " is not finite at node " << node << " (x=" << x << ")";
        throw EvaluationError(msg.str(), x);
    }
    return value;
}

}  // namespace detail

namespace {

double clamp_to_unit(double y, std::string_view name, double x, std::size_t node) {
    if (y < -kRangeTolerance || y > 1.0 + kRangeTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << name << "(" << x << ") = " << y << " leaves [0,1] at node " << node;
        throw RangeError(msg.str());
    }
    return y < 0.0 ? 0.0 : (y > 1.0 ? 1.0 : y);
}

double snap_endpoint(double value, double target, std::string_view where) {
    if (std::abs(value - target) > kBoundaryTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "Tf(" << where << ") = " << value << " instead of " << target
            << "; the spec violates the boundary hypotheses";
        throw PreconditionError(msg.str());
    }
    return target;
}

}  // namespace

DiscreteOperator::DiscreteOperator(const EquationSpec& spec, std::size_t n_intervals)
    : weight_(n_intervals + 1), target1_(n_intervals + 1), target2_(n_intervals + 1) {
    if (n_intervals < 2) {
        throw ShapeError("operator grid needs at least 2 intervals");
    }
    const double n = static_cast<double>(n_intervals);
    for (std::size_t i = 0; i <= n_intervals; ++i) {
        const double x = static_cast<double>(i) / n;
        weight_[i] = detail::evaluate_coefficient(spec.phi, "phi", x, i);
        target1_[i] = clamp_to_unit(detail::evaluate_coefficient(spec.phi1, "phi1", x, i), "phi1", x, i);
        target2_[i] = clamp_to_unit(detail::evaluate_coefficient(spec.phi2, "phi2", x, i), "phi2", x, i);
    }
}

GridFunction DiscreteOperator::apply(const GridFunction& f) const {
    if (f.intervals() != intervals()) {
        throw ShapeError("operator built for " + std::to_string(intervals()) +
                         " intervals applied to a grid of " + std::to_string(f.intervals()));
    }
    if (!f.admissible()) {
        throw PreconditionError("T is defined on admissible functions (f(0)=0, f(1)=1)");
    }
    std::vector<double> out(weight_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double w = weight_[i];
        out[i] = w * f(target1_[i]) + (1.0 - w) * f(target2_[i]);
    }
    out.front() = snap_endpoint(out.front(), 0.0, "0");
    out.back() = snap_endpoint(out.back(), 1.0, "1");
    return GridFunction(std::move(out));
}

GridFunction apply_T(const EquationSpec& spec, const GridFunction& f) {
    return DiscreteOperator(spec, f.intervals()).apply(f);
}

}  // namespace funceq
