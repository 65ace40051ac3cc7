#include "funceq/certify.hpp"

#include <algorithm>
#include <cmath>

#include "funceq/errors.hpp"
#include "funceq/grid_function.hpp"
#include "funceq/operator.hpp"

namespace funceq {

std::string_view to_string(NormSource s) {
    return s == NormSource::analytic ? "analytic" : "grid-estimate";
}

std::vector<std::string> BoundaryChecks::failures() const {
    std::vector<std::string> out;
    if (!phi_at_0) out.emplace_back("phi(0)=0");
    if (!phi_at_1) out.emplace_back("phi(1)=1");
    if (!phi1_at_1) out.emplace_back("phi1(1)=1");
    if (!phi2_at_0) out.emplace_back("phi2(0)=0");
    return out;
}

namespace {

std::vector<double> sample_nodes(const RealFunction& fn, std::string_view name, std::size_t n) {
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = detail::evaluate_coefficient(fn, name, static_cast<double>(i) / static_cast<double>(n), i);
    }
    return v;
}

bool near(double value, double target) {
    return std::abs(value - target) <= kBoundaryTolerance;
}

}  // namespace

ContractionReport certify(const EquationSpec& spec, std::size_t grid_n) {
    if (grid_n < 2) {
        throw ShapeError("certify needs at least 2 grid intervals");
    }
    const auto phi = sample_nodes(spec.phi, "phi", grid_n);
    const auto phi1 = sample_nodes(spec.phi1, "phi1", grid_n);
    const auto phi2 = sample_nodes(spec.phi2, "phi2", grid_n);

    ContractionReport r;
    r.boundary.phi_at_0 = near(phi.front(), 0.0);
    r.boundary.phi_at_1 = near(phi.back(), 1.0);
    r.boundary.phi1_at_1 = near(phi1.back(), 1.0);
    r.boundary.phi2_at_0 = near(phi2.front(), 0.0);

    const auto in_unit = [](double y) {
        return y >= -kRangeTolerance && y <= 1.0 + kRangeTolerance;
    };
    r.range_ok = std::all_of(phi1.begin(), phi1.end(), in_unit) &&
                 std::all_of(phi2.begin(), phi2.end(), in_unit);

    if (spec.analytic_norms) {
        const auto& a = *spec.analytic_norms;
        r.norm_phi = {a.norm_phi, NormSource::analytic};
        r.norm_phi1 = {a.norm_phi1, NormSource::analytic};
        r.norm_phi2 = {a.norm_phi2, NormSource::analytic};
        r.phi1_at_0 = {a.phi1_at_0, NormSource::analytic};
    } else {
        r.norm_phi = {lipschitz_norm(GridFunction(phi)), NormSource::grid_estimate};
        r.norm_phi1 = {lipschitz_norm(GridFunction(phi1)), NormSource::grid_estimate};
        r.norm_phi2 = {lipschitz_norm(GridFunction(phi2)), NormSource::grid_estimate};
        r.phi1_at_0 = {phi1.front(), NormSource::grid_estimate};
    }

    const double np = r.norm_phi.value;
    r.contraction_constant = 2.0 * np * (r.norm_phi1.value - r.phi1_at_0.value + r.norm_phi2.value);
    r.operator_norm_bound =
        2.0 * np * (r.norm_phi1.value + r.norm_phi2.value) - np * r.phi1_at_0.value;
    r.guaranteed = r.contraction_constant < 1.0;

    for (double v : phi) {
        r.lemma_max_deviation = std::max(r.lemma_max_deviation, std::abs(v - 1.0));
    }
    r.lemma_ok = r.lemma_max_deviation <= np + 1e-9;
    return r;
}

}  // namespace funceq
