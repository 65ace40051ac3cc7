#include "funceq/cli/spec_file.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "funceq/certify.hpp"
#include "funceq/exact_family.hpp"

using namespace funceq;
using namespace funceq::cli;

namespace {

std::string error_location(const std::string& text) {
    try {
        parse_spec_file(text);
    } catch (const SpecFileError& e) {
        return e.location();
    }
    return "<no error>";
}

}  // namespace

TEST(SpecFile, ParadiseForm) {
    const auto s = parse_spec_file(R"({"family": "paradise", "alpha": 0.1, "beta": 0.5})");
    EXPECT_EQ(s.form, SpecFile::Form::paradise);
    EXPECT_EQ(s.params.at("alpha"), 0.1);
    EXPECT_EQ(s.params.at("beta"), 0.5);
    EXPECT_FALSE(s.grid_n.has_value());
    const auto eq = to_equation(s);
    EXPECT_DOUBLE_EQ(eq.phi1(0.0), 0.9);
    EXPECT_TRUE(eq.analytic_norms.has_value());
}

TEST(SpecFile, ExactForm) {
    const auto s = parse_spec_file(R"({"family": "exact", "alpha": 0.3, "beta": 0.7, "m": 4, "grid_n": 4096})");
    EXPECT_EQ(s.form, SpecFile::Form::exact);
    EXPECT_EQ(*s.grid_n, 4096u);
    EXPECT_NEAR(to_equation(s).phi(0.5), phi_m({0.3, 0.7, 4.0}, 0.5), 1e-15);
}

TEST(SpecFile, CustomFormWithParameters) {
    const auto s = parse_spec_file(R"({"phi": "x", "phi1": "alpha*x + 1 - alpha", "phi2": "beta*x",
                                       "alpha": 0.1, "beta": 0.2, "tol": 1e-8, "max_iter": 50, "metric": "sup"})");
    EXPECT_EQ(s.form, SpecFile::Form::custom);
    EXPECT_EQ(*s.metric, Metric::sup);
    EXPECT_EQ(*s.max_iter, 50u);
    const auto eq = to_equation(s);
    EXPECT_NEAR(eq.phi1(0.5), 0.95, 1e-15);
    EXPECT_NEAR(certify(eq, 1024).contraction_constant, 0.6, 1e-9);
    const auto sub = substituted_expressions(s);
    EXPECT_EQ(sub["phi1"], "(0.1)*x + 1 - (0.1)");
}

TEST(SpecFile, SubstitutionRespectsWordBoundaries) {
    EXPECT_EQ(substitute_parameters("m*x + max(x, m)", {{"m", 4.0}}), "(4)*x + max(x, (4))");
    EXPECT_EQ(substitute_parameters("alphax + alpha", {{"alpha", 0.5}}), "alphax + (0.5)");
}

TEST(SpecFile, StructuralErrors) {
    EXPECT_EQ(error_location("{\"family\": \"paradise\", \"alpha\": }").rfind("byte ", 0), 0u);
    EXPECT_EQ(error_location("[1, 2]"), "/");
    EXPECT_EQ(error_location(R"({"alpha": 0.1})"), "/");
    EXPECT_EQ(error_location(R"({"family": "paradise", "phi": "x", "phi1": "1", "phi2": "0", "alpha": 0.1, "beta": 0.2})"), "/");
    EXPECT_EQ(error_location(R"({"family": "cubic", "alpha": 0.1, "beta": 0.2})"), "/family");
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": 0.1, "beta": 0.2, "gamma": 1})"), "/gamma");
}

TEST(SpecFile, ValueErrors) {
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": 0.1})"), "/beta");
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": 1.5, "beta": 0.2})"), "/alpha");
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": "0.1", "beta": 0.2})"), "/alpha");
    EXPECT_EQ(error_location(R"({"family": "exact", "alpha": 0.3, "beta": 0.7, "m": 0})"), "/m");
    EXPECT_EQ(error_location(R"({"family": "exact", "alpha": 0.8, "beta": 0.7, "m": 2})"), "/alpha");
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": 0.1, "beta": 0.2, "grid_n": 1})"), "/grid_n");
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": 0.1, "beta": 0.2, "grid_n": 2.5})"), "/grid_n");
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": 0.1, "beta": 0.2, "tol": -1})"), "/tol");
    EXPECT_EQ(error_location(R"({"family": "paradise", "alpha": 0.1, "beta": 0.2, "metric": "linf"})"), "/metric");
    EXPECT_EQ(error_location(R"({"phi": "x", "phi1": 1, "phi2": "0"})"), "/phi1");
}

TEST(SpecFile, ExpressionErrorNamesFieldAndOffset) {
    const auto s = parse_spec_file(R"({"phi": "x", "phi1": "1", "phi2": "x*/2"})");
    try {
        to_equation(s);
        FAIL() << "expected SpecFileError";
    } catch (const SpecFileError& e) {
        EXPECT_EQ(e.location(), "/phi2@2");
    }
}

TEST(SpecFile, MissingFileIsAnInputError) {
    EXPECT_THROW(load_spec_file("/nonexistent/spec.json"), InputError);
}

TEST(SpecFile, CanonicalJsonRoundTrips) {
    for (const char* text : {
             R"({"family": "paradise", "alpha": 0.1, "beta": 0.5})",
             R"({"family": "exact", "alpha": 0.3, "beta": 0.7, "m": 7.5, "tol": 1e-7})",
             R"({"phi": "x^2", "phi1": "alpha*x + 1 - alpha", "phi2": "beta*x", "alpha": 0.1, "beta": 0.2, "metric": "lip", "grid_n": 512})",
         }) {
        const auto s = parse_spec_file(text);
        const auto dumped = to_json(s).dump();
        const auto again = parse_spec_file(dumped);
        EXPECT_EQ(to_json(again).dump(), dumped) << text;
        EXPECT_EQ(again.params, s.params);
        EXPECT_EQ(again.phi, s.phi);
        EXPECT_EQ(again.grid_n, s.grid_n);
        EXPECT_EQ(again.tol, s.tol);
        EXPECT_EQ(again.metric, s.metric);
    }
}
