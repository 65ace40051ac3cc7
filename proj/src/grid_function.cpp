#include "funceq/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "funceq/errors.hpp"

namespace funceq {

GridFunction::GridFunction(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 3) {
        throw ShapeError("grid function needs at least 2 intervals, got " +
                         std::to_string(values_.size() == 0 ? 0 : values_.size() - 1));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("grid function value at node " + std::to_string(i) + " is not finite");
        }
    }
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, std::size_t n_intervals) {
    if (n_intervals < 2) {
        throw ShapeError("grid needs at least 2 intervals");
    }
    std::vector<double> v(n_intervals + 1);
    const double n = static_cast<double>(n_intervals);
    for (std::size_t i = 0; i <= n_intervals; ++i) {
        v[i] = f(static_cast<double>(i) / n);
    }
    return GridFunction(std::move(v));
}

GridFunction GridFunction::identity(std::size_t n_intervals) {
    return sample([](double x) { return x; }, n_intervals);
}

GridFunction GridFunction::zero(std::size_t n_intervals) {
    return sample([](double) { return 0.0; }, n_intervals);
}

double GridFunction::node(std::size_t i) const noexcept {
    return static_cast<double>(i) / static_cast<double>(intervals());
}

double GridFunction::operator()(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("evaluation point " + std::to_string(x) + " outside [0,1]");
    }
    const std::size_t n = intervals();
    const double nd = static_cast<double>(n);
    const double t = x * nd;
    const double nearest = std::nearbyint(t);
    const auto k = static_cast<std::size_t>(nearest);
    if (k <= n && x == static_cast<double>(k) / nd) {
        return values_[k];
    }
    std::size_t i = static_cast<std::size_t>(std::floor(t));
    if (i >= n) {
        i = n - 1;
    }
    const double w = t - static_cast<double>(i);
    return values_[i] + w * (values_[i + 1] - values_[i]);
}

bool GridFunction::admissible() const noexcept {
    return values_.front() == 0.0 && values_.back() == 1.0;
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::sup: return "sup";
        case Metric::l2: return "l2";
        case Metric::lip: return "lip";
    }
    return "?";
}

Metric parse_metric(std::string_view name) {
    if (name == "sup") return Metric::sup;
    if (name == "l2") return Metric::l2;
    if (name == "lip") return Metric::lip;
    throw DomainError("unknown metric '" + std::string(name) + "' (expected sup, l2 or lip)");
}

double eval(const GridFunction& f, double x) {
    return f(x);
}

double lipschitz_norm(const GridFunction& f) {
    const auto v = f.values();
    double max_step = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        max_step = std::max(max_step, std::abs(v[i + 1] - v[i]));
    }
    return std::abs(v.front()) + max_step * static_cast<double>(f.intervals());
}

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (double v : f.values()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double trapezoid(std::span<const double> samples) {
    if (samples.size() < 2) {
        throw ShapeError("trapezoid rule needs at least 2 samples");
    }
    double interior = 0.0;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        interior += samples[i];
    }
    const double h = 1.0 / static_cast<double>(samples.size() - 1);
    return h * (interior + 0.5 * (samples.front() + samples.back()));
}

double distance(const GridFunction& f, const GridFunction& g, Metric metric) {
    if (f.intervals() != g.intervals()) {
        throw ShapeError("distance between grids of " + std::to_string(f.intervals()) + " and " +
                         std::to_string(g.intervals()) + " intervals");
    }
    const auto a = f.values();
    const auto b = g.values();
    switch (metric) {
        case Metric::sup: {
            double m = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                m = std::max(m, std::abs(a[i] - b[i]));
            }
            return m;
        }
        case Metric::l2: {
            std::vector<double> sq(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double d = a[i] - b[i];
                sq[i] = d * d;
            }
            return std::sqrt(trapezoid(sq));
        }
        case Metric::lip: {
            double max_step = 0.0;
            for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                const double step = (a[i + 1] - b[i + 1]) - (a[i] - b[i]);
                max_step = std::max(max_step, std::abs(step));
            }
            return std::abs(a[0] - b[0]) + max_step * static_cast<double>(f.intervals());
        }
    }
    return 0.0;
}

}  // namespace funceq

namespace funceq {

GridFunction sample_admissible(const std::function<double(double)>& f, std::size_t n_intervals,
                               double tolerance) {
    const GridFunction raw = GridFunction::sample(f, n_intervals);
    std::vector<double> v(raw.values().begin(), raw.values().end());
    if (std::abs(v.front()) > tolerance || std::abs(v.back() - 1.0) > tolerance) {
        throw PreconditionError("function is not admissible: f(0) = " + std::to_string(v.front()) +
                                ", f(1) = " + std::to_string(v.back()) + " (need 0 and 1)");
    }
    v.front() = 0.0;
    v.back() = 1.0;
    return GridFunction(std::move(v));
}

}  // namespace funceq
