#include "funceq/cli/spec_file.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "funceq/exact_family.hpp"
#include "funceq/expr.hpp"

namespace funceq::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const std::set<std::string> kRunKeys = {"grid_n", "tol", "max_iter", "metric"};
const std::set<std::string> kParamKeys = {"alpha", "beta", "m"};

double number_field(const json& doc, const std::string& key) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw SpecFileError("/" + key, "missing required number '" + key + "'");
    }
    if (!it->is_number()) {
        throw SpecFileError("/" + key, "'" + key + "' must be a number");
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
        throw SpecFileError("/" + key, "'" + key + "' must be finite");
    }
    return v;
}

std::string string_field(const json& doc, const std::string& key) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw SpecFileError("/" + key, "missing required expression '" + key + "'");
    }
    if (!it->is_string()) {
        throw SpecFileError("/" + key, "'" + key + "' must be an expression string");
    }
    return it->get<std::string>();
}

std::size_t positive_integer(const json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
        throw SpecFileError("/" + key, "'" + key + "' must be a positive integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

void read_run_settings(const json& doc, SpecFile& s) {
    if (doc.contains("grid_n")) {
        s.grid_n = positive_integer(doc, "grid_n");
        if (*s.grid_n < 2) throw SpecFileError("/grid_n", "grid_n must be at least 2");
    }
    if (doc.contains("tol")) {
        const double t = number_field(doc, "tol");
        if (!(t > 0.0)) throw SpecFileError("/tol", "tol must be positive");
        s.tol = t;
    }
    if (doc.contains("max_iter")) {
        s.max_iter = positive_integer(doc, "max_iter");
    }
    if (doc.contains("metric")) {
        if (!doc["metric"].is_string()) throw SpecFileError("/metric", "metric must be a string");
        try {
            s.metric = parse_metric(doc["metric"].get<std::string>());
        } catch (const DomainError& e) {
            throw SpecFileError("/metric", e.what());
        }
    }
}

void check_unit_interval(const SpecFile& s, const std::string& key) {
    const double v = s.params.at(key);
    if (!(v > 0.0 && v < 1.0)) {
        throw SpecFileError("/" + key, key + " must lie in (0, 1)");
    }
}

std::string format_number(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

expr::Expr parse_field(const std::string& name, const std::string& text) {
    try {
        return expr::parse(text);
    } catch (const expr::ParseError& e) {
        throw SpecFileError("/" + name + "@" + std::to_string(e.offset()),
                            "in " + name + " = \"" + text + "\": " + e.what());
    }
}

RealFunction as_function(expr::Expr e) {
    return [e = std::move(e)](double x) { return e(x); };
}

}  // namespace

SpecFileError::SpecFileError(std::string location, const std::string& message)
    : InputError("spec file " + location + ": " + message), location_(std::move(location)) {}

SpecFile parse_spec_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SpecFileError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) {
        throw SpecFileError("/", "spec file must be a JSON object");
    }

    const bool family_form = doc.contains("family");
    const bool custom_form = doc.contains("phi") || doc.contains("phi1") || doc.contains("phi2");
    if (family_form == custom_form) {
        throw SpecFileError("/", "exactly one of the forms {family, ...} or {phi, phi1, phi2} is required");
    }

    SpecFile s;
    std::set<std::string> allowed = kRunKeys;
    if (family_form) {
        if (!doc["family"].is_string()) throw SpecFileError("/family", "family must be a string");
        const auto family = doc["family"].get<std::string>();
        allowed.insert("family");
        allowed.insert("alpha");
        allowed.insert("beta");
        s.params["alpha"] = number_field(doc, "alpha");
        s.params["beta"] = number_field(doc, "beta");
        check_unit_interval(s, "alpha");
        check_unit_interval(s, "beta");
        if (family == "paradise") {
            s.form = SpecFile::Form::paradise;
        } else if (family == "exact") {
            s.form = SpecFile::Form::exact;
            allowed.insert("m");
            s.params["m"] = number_field(doc, "m");
            if (!(s.params["m"] > 0.0)) throw SpecFileError("/m", "m must be positive");
            if (s.params["alpha"] > s.params["beta"]) {
                throw SpecFileError("/alpha", "exact family needs alpha <= beta");
            }
        } else {
            throw SpecFileError("/family", "unknown family '" + family + "' (expected paradise or exact)");
        }
    } else {
        s.form = SpecFile::Form::custom;
        s.phi = string_field(doc, "phi");
        s.phi1 = string_field(doc, "phi1");
        s.phi2 = string_field(doc, "phi2");
        allowed.insert({"phi", "phi1", "phi2"});
        for (const auto& key : kParamKeys) {
            allowed.insert(key);
            if (doc.contains(key)) s.params[key] = number_field(doc, key);
        }
    }
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.count(key)) {
            throw SpecFileError("/" + key, "unexpected key '" + key + "'");
        }
    }
    read_run_settings(doc, s);
    return s;
}

SpecFile load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SpecFileError(path.string(), "cannot open spec file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_file(buf.str());
}

std::string substitute_parameters(std::string_view text, const std::map<std::string, double>& params) {
    std::string out(text);
    for (const auto& [name, value] : params) {
        const std::regex word("\\b" + name + "\\b");
        out = std::regex_replace(out, word, "(" + format_number(value) + ")");
    }
    return out;
}

EquationSpec to_equation(const SpecFile& spec) {
    switch (spec.form) {
        case SpecFile::Form::paradise:
            return paradise(spec.params.at("alpha"), spec.params.at("beta"));
        case SpecFile::Form::exact:
            return build_spec(ExactFamilyParams{spec.params.at("alpha"), spec.params.at("beta"), spec.params.at("m")});
        case SpecFile::Form::custom:
            break;
    }
    return custom(as_function(parse_field("phi", substitute_parameters(spec.phi, spec.params))),
                  as_function(parse_field("phi1", substitute_parameters(spec.phi1, spec.params))),
                  as_function(parse_field("phi2", substitute_parameters(spec.phi2, spec.params))));
}

ordered_json to_json(const SpecFile& spec) {
    ordered_json j;
    switch (spec.form) {
        case SpecFile::Form::paradise:
            j["family"] = "paradise";
            break;
        case SpecFile::Form::exact:
            j["family"] = "exact";
            break;
        case SpecFile::Form::custom:
            j["phi"] = spec.phi;
            j["phi1"] = spec.phi1;
            j["phi2"] = spec.phi2;
            break;
    }
    for (const char* key : {"alpha", "beta", "m"}) {
        if (const auto it = spec.params.find(key); it != spec.params.end()) {
            j[key] = it->second;
        }
    }
    if (spec.grid_n) j["grid_n"] = *spec.grid_n;
    if (spec.tol) j["tol"] = *spec.tol;
    if (spec.max_iter) j["max_iter"] = *spec.max_iter;
    if (spec.metric) j["metric"] = std::string(to_string(*spec.metric));
    return j;
}

ordered_json substituted_expressions(const SpecFile& spec) {
    ordered_json j = ordered_json::object();
    if (spec.form == SpecFile::Form::custom) {
        j["phi"] = substitute_parameters(spec.phi, spec.params);
        j["phi1"] = substitute_parameters(spec.phi1, spec.params);
        j["phi2"] = substitute_parameters(spec.phi2, spec.params);
    }
    return j;
}

}  // namespace funceq::cli
