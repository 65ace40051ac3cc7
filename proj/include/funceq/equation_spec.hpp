#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace funceq {

using RealFunction = std::function<double(double)>;

/// Norm data known in closed form for the built-in families.
struct AnalyticNorms {
    double norm_phi = 0.0;
    double norm_phi1 = 0.0;
    double norm_phi2 = 0.0;
    double phi1_at_0 = 0.0;
};

struct ParadiseFamily {
    double alpha = 0.0;
    double beta = 0.0;
};

struct ExactFamily {
    double alpha = 0.0;
    double beta = 0.0;
    double m = 0.0;
};

struct CustomFamily {};

using FamilyTag = std::variant<ParadiseFamily, ExactFamily, CustomFamily>;

/**
 * Coefficients of f(x) = phi(x) f(phi1(x)) + (1 - phi(x)) f(phi2(x)).
 *
 * phi is expected in D^{0,1}[0,1]; phi1, phi2 map [0,1] into [0,1] with
 * phi1(1) = 1 and phi2(0) = 0. Those hypotheses are checked by certify(),
 * not here, so that invalid custom specs can still be reported on.
 */
struct EquationSpec {
    RealFunction phi;
    RealFunction phi1;
    RealFunction phi2;
    std::optional<AnalyticNorms> analytic_norms;
    FamilyTag family = CustomFamily{};
};

/// f(x) = x f(alpha x + 1 - alpha) + (1 - x) f(beta x), 0 < alpha, beta < 1.
EquationSpec paradise(double alpha, double beta);

EquationSpec custom(RealFunction phi, RealFunction phi1, RealFunction phi2);

std::string describe(const FamilyTag& family);

}  // namespace funceq
