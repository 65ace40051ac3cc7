#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "funceq/equation_spec.hpp"

namespace funceq {

enum class NormSource { analytic, grid_estimate };

std::string_view to_string(NormSource s);

struct NormValue {
    double value = 0.0;
    NormSource source = NormSource::analytic;
};

struct BoundaryChecks {
    bool phi_at_0 = false;   // phi(0) = 0
    bool phi_at_1 = false;   // phi(1) = 1
    bool phi1_at_1 = false;  // phi1(1) = 1
    bool phi2_at_0 = false;  // phi2(0) = 0

    bool all() const noexcept { return phi_at_0 && phi_at_1 && phi1_at_1 && phi2_at_0; }
    /// Names of the failed hypotheses, e.g. "phi2(0)=0".
    std::vector<std::string> failures() const;
};

/**
 * Hypothesis check and Banach-contraction certificate for a spec.
 *
 * contraction_constant is c = 2|phi|(|phi1| - phi1(0) + |phi2|); c < 1
 * guarantees a unique fixed point in D^{0,1} and geometric convergence of
 * the Picard iteration in the Lipschitz metric. When norms are grid
 * estimates they are lower bounds of the true norms, so the verdict is
 * heuristic for custom specs.
 */
struct ContractionReport {
    BoundaryChecks boundary;
    bool range_ok = false;
    NormValue norm_phi;
    NormValue norm_phi1;
    NormValue norm_phi2;
    NormValue phi1_at_0;
    double contraction_constant = 0.0;
    double operator_norm_bound = 0.0;
    bool guaranteed = false;
    // Sampled check of |phi(x) - 1| <= |phi| over the nodes.
    double lemma_max_deviation = 0.0;
    bool lemma_ok = false;

    bool hypotheses_ok() const noexcept { return boundary.all() && range_ok; }
};

ContractionReport certify(const EquationSpec& spec, std::size_t grid_n);

}  // namespace funceq
