#include "funceq/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace funceq::expr {

namespace {

enum class TokenKind { number, identifier, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    TokenKind kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::number: return "number '" + std::string(t.text) + "'";
        case TokenKind::identifier: return "identifier '" + std::string(t.text) + "'";
        case TokenKind::end: return "end of input";
        default: return "'" + std::string(t.text) + "'";
    }
}

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                      src_[pos_] == '\r')) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            return {TokenKind::end, start, {}};
        }
        const char c = src_[pos_];
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            return lex_number(start);
        }
        if (is_ident_start(c)) {
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
            return {TokenKind::identifier, start, src_.substr(start, pos_ - start)};
        }
        ++pos_;
        const auto one = src_.substr(start, 1);
        switch (c) {
            case '+': return {TokenKind::plus, start, one};
            case '-': return {TokenKind::minus, start, one};
            case '*': return {TokenKind::star, start, one};
            case '/': return {TokenKind::slash, start, one};
            case '^': return {TokenKind::caret, start, one};
            case '(': return {TokenKind::lparen, start, one};
            case ')': return {TokenKind::rparen, start, one};
            case ',': return {TokenKind::comma, start, one};
            default: break;
        }
        std::string found = "character '";
        found += c;
        found += "'";
        throw ParseError(start, "a number, identifier, operator or parenthesis", found);
    }

private:
    Token lex_number(std::size_t start) {
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && is_digit(src_[p])) {
                pos_ = p;
                while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
            }
        }
        const auto text = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
            throw ParseError(start, "a finite number", "'" + std::string(text) + "'");
        }
        return {TokenKind::number, start, text, value};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

std::optional<Function> lookup_function(std::string_view name) {
    static constexpr std::array<Function, 7> all = {Function::sin, Function::cos,  Function::exp, Function::sqrt,
                                                    Function::abs, Function::min, Function::max};
    for (Function f : all) {
        if (function_name(f) == name) return f;
    }
    return std::nullopt;
}

NodePtr make(auto value) {
    return std::make_shared<const Node>(Node{std::move(value)});
}

int binary_precedence(TokenKind k) {
    switch (k) {
        case TokenKind::plus:
        case TokenKind::minus: return 1;
        case TokenKind::star:
        case TokenKind::slash: return 2;
        default: return 0;
    }
}

BinaryOp binary_op(TokenKind k) {
    switch (k) {
        case TokenKind::plus: return BinaryOp::add;
        case TokenKind::minus: return BinaryOp::sub;
        case TokenKind::star: return BinaryOp::mul;
        case TokenKind::slash: return BinaryOp::div;
        default: return BinaryOp::pow;
    }
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    NodePtr parse_all() {
        NodePtr root = parse_binary(1);
        if (current_.kind != TokenKind::end) {
            const bool stray_paren = current_.kind == TokenKind::rparen;
            throw ParseError(current_.offset, stray_paren ? "end of input (unbalanced ')')" : "end of input",
                             describe(current_));
        }
        return root;
    }

private:
    void advance() { current_ = lexer_.next(); }

    void expect(TokenKind kind, std::string_view what) {
        if (current_.kind != kind) {
            throw ParseError(current_.offset, std::string(what), describe(current_));
        }
        advance();
    }

    // Precedence climbing over the left-associative levels (+ -) and (* /).
    NodePtr parse_binary(int min_prec) {
        NodePtr lhs = parse_unary();
        for (;;) {
            const int prec = binary_precedence(current_.kind);
            if (prec == 0 || prec < min_prec) {
                return lhs;
            }
            const BinaryOp op = binary_op(current_.kind);
            advance();
            NodePtr rhs = parse_binary(prec + 1);
            lhs = make(Binary{op, std::move(lhs), std::move(rhs)});
        }
    }

    NodePtr parse_unary() {
        if (current_.kind == TokenKind::minus) {
            advance();
            return make(Negate{parse_unary()});
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (current_.kind == TokenKind::caret) {
            advance();
            return make(Binary{BinaryOp::pow, std::move(base), parse_unary()});
        }
        return base;
    }

    NodePtr parse_primary() {
        const Token tok = current_;
        switch (tok.kind) {
            case TokenKind::number:
                advance();
                return make(Number{tok.number});
            case TokenKind::lparen: {
                advance();
                NodePtr inner = parse_binary(1);
                if (current_.kind != TokenKind::rparen) {
                    throw ParseError(current_.offset, "')' to close '(' at offset " + std::to_string(tok.offset),
                                     describe(current_));
                }
                advance();
                return inner;
            }
            case TokenKind::identifier:
                return parse_identifier(tok);
            default:
                throw ParseError(tok.offset, "a number, 'x', 'pi', a function call or '('", describe(tok));
        }
    }

    NodePtr parse_identifier(const Token& tok) {
        advance();
        if (tok.text == "x") return make(Variable{});
        if (tok.text == "pi") return make(Pi{});
        const auto fn = lookup_function(tok.text);
        if (!fn) {
            throw ParseError(tok.offset, "'x', 'pi' or one of sin, cos, exp, sqrt, abs, min, max", describe(tok));
        }
        expect(TokenKind::lparen, "'(' after " + std::string(tok.text));
        std::vector<NodePtr> args;
        args.push_back(parse_binary(1));
        while (current_.kind == TokenKind::comma) {
            advance();
            args.push_back(parse_binary(1));
        }
        if (current_.kind != TokenKind::rparen) {
            throw ParseError(current_.offset, "',' or ')' in call to " + std::string(tok.text), describe(current_));
        }
        advance();
        const std::size_t arity = function_arity(*fn);
        if (args.size() != arity) {
            throw ParseError(tok.offset, std::to_string(arity) + " argument(s) for " + std::string(tok.text),
                             std::to_string(args.size()) + " argument(s)");
        }
        return make(Call{*fn, std::move(args)});
    }

    Lexer lexer_;
    Token current_{TokenKind::end, 0, {}};
};

[[noreturn]] void eval_fail(const std::string& what, double x) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " at x=" << x;
    throw EvaluationError(msg.str(), x);
}

double checked(double v, const char* what, double x) {
    if (!std::isfinite(v)) eval_fail(std::string("non-finite result of ") + what, x);
    return v;
}

double eval_node(const Node& n, double x) {
    return std::visit(
        [x](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Number>) {
                return v.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x;
            } else if constexpr (std::is_same_v<T, Pi>) {
                return std::numbers::pi;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval_node(*v.operand, x);
            } else if constexpr (std::is_same_v<T, Binary>) {
                const double a = eval_node(*v.lhs, x);
                const double b = eval_node(*v.rhs, x);
                switch (v.op) {
                    case BinaryOp::add: return checked(a + b, "addition", x);
                    case BinaryOp::sub: return checked(a - b, "subtraction", x);
                    case BinaryOp::mul: return checked(a * b, "multiplication", x);
                    case BinaryOp::div:
                        if (b == 0.0) eval_fail("division by zero", x);
                        return checked(a / b, "division", x);
                    case BinaryOp::pow:
                        if (a < 0.0 && b != std::trunc(b)) {
                            eval_fail("negative base with non-integer exponent", x);
                        }
                        return checked(std::pow(a, b), "power", x);
                }
                return 0.0;
            } else {
                const double a = eval_node(*v.args[0], x);
                switch (v.fn) {
                    case Function::sin: return std::sin(a);
                    case Function::cos: return std::cos(a);
                    case Function::exp: return checked(std::exp(a), "exp", x);
                    case Function::sqrt:
                        if (a < 0.0) eval_fail("square root of a negative number", x);
                        return std::sqrt(a);
                    case Function::abs: return std::abs(a);
                    case Function::min: return std::min(a, eval_node(*v.args[1], x));
                    case Function::max: return std::max(a, eval_node(*v.args[1], x));
                }
                return 0.0;
            }
        },
        n.value);
}

// Precedence used for parenthesisation: atoms 5, power 4, negation 3,
// (* /) 2, (+ -) 1.
int node_precedence(const Node& n) {
    if (const auto* b = std::get_if<Binary>(&n.value)) {
        switch (b->op) {
            case BinaryOp::add:
            case BinaryOp::sub: return 1;
            case BinaryOp::mul:
            case BinaryOp::div: return 2;
            case BinaryOp::pow: return 4;
        }
    }
    if (std::holds_alternative<Negate>(n.value)) return 3;
    return 5;
}

void render(const Node& n, std::string& out);

void render_wrapped(const Node& n, bool parens, std::string& out) {
    if (parens) out += '(';
    render(n, out);
    if (parens) out += ')';
}

void render(const Node& n, std::string& out) {
    std::visit(
        [&out, &n](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Number>) {
                std::array<char, 32> buf{};
                const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v.value);
                out.append(buf.data(), res.ptr);
            } else if constexpr (std::is_same_v<T, Variable>) {
                out += 'x';
            } else if constexpr (std::is_same_v<T, Pi>) {
                out += "pi";
            } else if constexpr (std::is_same_v<T, Negate>) {
                out += '-';
                render_wrapped(*v.operand, node_precedence(*v.operand) < 3, out);
            } else if constexpr (std::is_same_v<T, Binary>) {
                const int p = node_precedence(n);
                const int lp = node_precedence(*v.lhs);
                const int rp = node_precedence(*v.rhs);
                if (v.op == BinaryOp::pow) {
                    render_wrapped(*v.lhs, lp <= 4, out);
                    out += '^';
                    render_wrapped(*v.rhs, rp < 3, out);
                } else {
                    static constexpr std::array<const char*, 4> symbol = {" + ", " - ", "*", "/"};
                    render_wrapped(*v.lhs, lp < p, out);
                    out += symbol[static_cast<std::size_t>(v.op)];
                    render_wrapped(*v.rhs, rp <= p, out);
                }
            } else {
                out += function_name(v.fn);
                out += '(';
                for (std::size_t i = 0; i < v.args.size(); ++i) {
                    if (i) out += ", ";
                    render(*v.args[i], out);
                }
                out += ')';
            }
        },
        n.value);
}

bool equal_nodes(const Node& a, const Node& b) {
    if (a.value.index() != b.value.index()) return false;
    return std::visit(
        [&b](const auto& va) -> bool {
            using T = std::decay_t<decltype(va)>;
            const auto& vb = std::get<T>(b.value);
            if constexpr (std::is_same_v<T, Number>) {
                return va.value == vb.value;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return equal_nodes(*va.operand, *vb.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return va.op == vb.op && equal_nodes(*va.lhs, *vb.lhs) && equal_nodes(*va.rhs, *vb.rhs);
            } else if constexpr (std::is_same_v<T, Call>) {
                if (va.fn != vb.fn || va.args.size() != vb.args.size()) return false;
                for (std::size_t i = 0; i < va.args.size(); ++i) {
                    if (!equal_nodes(*va.args[i], *vb.args[i])) return false;
                }
                return true;
            } else {
                return true;
            }
        },
        a.value);
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : InputError("parse error at offset " + std::to_string(offset) + ": expected " + expected + ", found " +
                 found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Expr::Expr(NodePtr root) : root_(std::move(root)) {
    if (!root_) {
        throw ConstructionError("expression root is null");
    }
}

double Expr::operator()(double x) const {
    return eval_node(*root_, x);
}

Expr parse(std::string_view source) {
    return Expr(Parser(source).parse_all());
}

double eval_ast(const Expr& e, double x) {
    return e(x);
}

std::string to_string(const Expr& e) {
    std::string out;
    render(e.root(), out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    return equal_nodes(a.root(), b.root());
}

std::string_view function_name(Function f) {
    switch (f) {
        case Function::sin: return "sin";
        case Function::cos: return "cos";
        case Function::exp: return "exp";
        case Function::sqrt: return "sqrt";
        case Function::abs: return "abs";
        case Function::min: return "min";
        case Function::max: return "max";
    }
    return "?";
}

std::size_t function_arity(Function f) {
    return (f == Function::min || f == Function::max) ? 2 : 1;
}

}  // namespace funceq::expr
