#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "funceq/equation_spec.hpp"
#include "funceq/errors.hpp"
#include "funceq/grid_function.hpp"

namespace funceq::cli {

/// Malformed or invalid spec file. `location` is a byte offset for syntax
/// errors or a JSON pointer such as "/alpha" for validation errors.
class SpecFileError : public InputError {
public:
    SpecFileError(std::string location, const std::string& message);
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

/**
 * Equation spec as read from a JSON document. Two forms:
 *
 *   {"family": "paradise", "alpha": 0.1, "beta": 0.5}
 *   {"family": "exact", "alpha": 0.3, "beta": 0.7, "m": 4}
 *   {"phi": "x", "phi1": "alpha*x + 1 - alpha", "phi2": "beta*x",
 *    "alpha": 0.1, "beta": 0.5}
 *
 * In the custom form the identifiers alpha, beta and m are replaced by
 * their values before the expressions are parsed. Every form accepts the
 * optional run settings grid_n, tol, max_iter and metric.
 */
struct SpecFile {
    enum class Form { paradise, exact, custom };

    Form form = Form::paradise;
    std::map<std::string, double> params;  // alpha, beta, m as given
    std::string phi;
    std::string phi1;
    std::string phi2;

    std::optional<std::size_t> grid_n;
    std::optional<double> tol;
    std::optional<std::size_t> max_iter;
    std::optional<Metric> metric;
};

SpecFile parse_spec_file(std::string_view text);
SpecFile load_spec_file(const std::filesystem::path& path);

/// Textual replacement of whole-word alpha, beta and m by their values.
std::string substitute_parameters(std::string_view text, const std::map<std::string, double>& params);

/// Builds the evaluable spec; expression errors name the offending field.
EquationSpec to_equation(const SpecFile& spec);

/// Canonical JSON form; parse_spec_file(to_json(s).dump()) reproduces s.
nlohmann::ordered_json to_json(const SpecFile& spec);

/// Substituted expression texts of a custom spec (empty object otherwise).
nlohmann::ordered_json substituted_expressions(const SpecFile& spec);

}  // namespace funceq::cli
