#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "funceq/errors.hpp"

namespace funceq::expr {

// A single-variable arithmetic language for coefficient functions.
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { ("*" | "/") unary } ;
//   unary   = "-" unary | power ;
//   power   = primary [ "^" unary ] ;            (right-associative)
//   primary = number | "x" | "pi" | func "(" args ")" | "(" expr ")" ;
//   func    = "sin" | "cos" | "exp" | "sqrt" | "abs" | "min" | "max" ;
//   args    = expr { "," expr } ;                 (min, max take 2; others 1)
//   number  = digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ]
//           | "." digits [ exponent ] ;

enum class BinaryOp { add, sub, mul, div, pow };
enum class Function { sin, cos, exp, sqrt, abs, min, max };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
    double value;
};
struct Variable {};
struct Pi {};
struct Negate {
    NodePtr operand;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Call {
    Function fn;
    std::vector<NodePtr> args;
};

struct Node {
    std::variant<Number, Variable, Pi, Negate, Binary, Call> value;
};

/// Immutable parsed expression; cheap to copy and safe to share.
class Expr {
public:
    explicit Expr(NodePtr root);

    const Node& root() const noexcept { return *root_; }
    double operator()(double x) const;

private:
    NodePtr root_;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t offset, std::string expected, std::string found);

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t offset_;
    std::string expected_;
    std::string found_;
};

Expr parse(std::string_view source);

/// Division by zero, sqrt of a negative number, a negative base with a
/// non-integer exponent, or any non-finite result throw EvaluationError.
double eval_ast(const Expr& e, double x);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

std::string_view function_name(Function f);
std::size_t function_arity(Function f);

}  // namespace funceq::expr
