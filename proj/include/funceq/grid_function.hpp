#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace funceq {

/**
 * Piecewise-linear function on the uniform grid x_i = i/N over [0,1].
 *
 * This is the finite-resolution stand-in for elements of the Lipschitz
 * space: a piecewise-linear interpolant is itself Lipschitz, and its
 * Lipschitz constant is the largest slope between adjacent nodes.
 *
 * Values are immutable after construction.
 */
class GridFunction {
public:
    /// Requires at least 3 nodes (N >= 2) and finite values.
    explicit GridFunction(std::vector<double> values);

    static GridFunction sample(const std::function<double(double)>& f, std::size_t n_intervals);
    static GridFunction identity(std::size_t n_intervals);
    static GridFunction zero(std::size_t n_intervals);

    std::size_t intervals() const noexcept { return values_.size() - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Abscissa of node i, computed as i/N.
    double node(std::size_t i) const noexcept;

    /// Linear interpolation; node abscissae return stored values exactly.
    double operator()(double x) const;

    /// f(0) == 0 and f(1) == 1 exactly.
    bool admissible() const noexcept;

private:
    std::vector<double> values_;
};

enum class Metric { sup, l2, lip };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view name);

double eval(const GridFunction& f, double x);

/// |f(0)| + max_i N |f_{i+1} - f_i|; exact for piecewise-linear f.
double lipschitz_norm(const GridFunction& f);

double sup_norm(const GridFunction& f);

/// sup: node-wise max; l2: composite trapezoid of (f-g)^2, then sqrt;
/// lip: Lipschitz norm of the difference.
double distance(const GridFunction& f, const GridFunction& g, Metric metric);

/// Composite trapezoid rule over [0,1] for samples on a uniform grid.
double trapezoid(std::span<const double> samples);

}  // namespace funceq

namespace funceq {

/// Samples f and snaps the endpoint values to exactly 0 and 1 when they are
/// within `tolerance`; otherwise throws PreconditionError.
GridFunction sample_admissible(const std::function<double(double)>& f, std::size_t n_intervals,
                               double tolerance = 1e-12);

}  // namespace funceq
