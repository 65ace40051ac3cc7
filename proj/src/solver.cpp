#include "funceq/solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "funceq/certify.hpp"
#include "funceq/errors.hpp"
#include "funceq/operator.hpp"

namespace funceq {

double IterationRecord::distance(Metric m) const noexcept {
    switch (m) {
        case Metric::sup: return d_sup;
        case Metric::l2: return d_l2;
        case Metric::lip: return d_lip;
    }
    return d_l2;
}

std::string_view to_string(StopReason r) {
    return r == StopReason::tolerance ? "tolerance" : "max_iterations";
}

SolveResult solve(const EquationSpec& spec, const GridFunction& f0, const SolveOptions& options) {
    if (!(options.tol > 0.0)) {
        throw DomainError("solve tolerance must be positive");
    }
    if (options.max_iter == 0) {
        throw DomainError("max_iter must be positive");
    }
    if (!f0.admissible()) {
        throw PreconditionError("initial iterate must satisfy f0(0)=0 and f0(1)=1");
    }

    const ContractionReport cert = certify(spec, f0.intervals());
    if (!cert.hypotheses_ok()) {
        throw PreconditionError("spec fails the boundary or range hypotheses");
    }

    ConvergenceHistory history;
    history.contraction_constant = cert.contraction_constant;
    history.guaranteed = cert.guaranteed;
    if (!cert.guaranteed) {
        std::ostringstream msg;
        msg << "contraction constant c = " << cert.contraction_constant
            << " >= 1: convergence is not guaranteed";
        history.warnings.push_back(msg.str());
    }

    using clock = std::chrono::steady_clock;
    const DiscreteOperator op(spec, f0.intervals());
    GridFunction current = f0;
    history.stop_reason = StopReason::max_iterations;
    for (std::size_t n = 1; n <= options.max_iter; ++n) {
        const auto t0 = clock::now();
        GridFunction next = op.apply(current);
        const double seconds = std::chrono::duration<double>(clock::now() - t0).count();

        IterationRecord rec;
        rec.n = n;
        rec.d_sup = distance(next, current, Metric::sup);
        rec.d_l2 = distance(next, current, Metric::l2);
        rec.d_lip = distance(next, current, Metric::lip);
        rec.seconds = seconds;
        history.records.push_back(rec);
        current = std::move(next);

        if (rec.distance(options.stop_metric) < options.tol) {
            history.stop_reason = StopReason::tolerance;
            break;
        }
    }
    return SolveResult{std::move(current), std::move(history)};
}

GridFunction iterate(const EquationSpec& spec, const GridFunction& f0, std::size_t n) {
    const DiscreteOperator op(spec, f0.intervals());
    GridFunction current = f0;
    for (std::size_t k = 0; k < n; ++k) {
        current = op.apply(current);
    }
    return current;
}

ExpFit fit_exponential(std::span<const double> indices, std::span<const double> values) {
    if (indices.size() != values.size()) {
        throw ShapeError("fit_exponential: indices and values differ in length");
    }
    if (values.size() < 3) {
        throw DegenerateFitError("exponential fit needs at least 3 points, got " +
                                 std::to_string(values.size()));
    }
    const double count = static_cast<double>(values.size());
    double sx = 0.0, sy = 0.0;
    std::vector<double> logs(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
            std::ostringstream msg;
            msg << "distance at n=" << indices[i] << " is " << values[i]
                << "; the iteration has reached round-off, reduce the number of iterations";
            throw DegenerateFitError(msg.str());
        }
        logs[i] = std::log(values[i]);
        sx += indices[i];
        sy += logs[i];
    }
    const double mx = sx / count;
    const double my = sy / count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double dx = indices[i] - mx;
        const double dy = logs[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw DegenerateFitError("exponential fit needs distinct indices");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    ExpFit fit;
    fit.amplitude = std::exp(intercept);
    fit.rate = -slope;
    fit.ratio = std::exp(slope);
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

ExpFit fit_exponential(const ConvergenceHistory& history, Metric metric, std::size_t skip_first) {
    std::vector<double> n;
    std::vector<double> d;
    for (std::size_t i = skip_first; i < history.records.size(); ++i) {
        n.push_back(static_cast<double>(history.records[i].n));
        d.push_back(history.records[i].distance(metric));
    }
    return fit_exponential(n, d);
}

double residual(const EquationSpec& spec, const GridFunction& f, Metric metric) {
    return distance(f, apply_T(spec, f), metric);
}

}  // namespace funceq
