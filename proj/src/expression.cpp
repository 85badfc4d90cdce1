#include "dtmm/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

#include "dtmm/errors.hpp"

namespace dtmm {

namespace {

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;
using Kind = Expression::Kind;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

double eval_node(const Node& n, double x) {
    switch (n.kind) {
        case Kind::number:
            return n.value;
        case Kind::variable:
            return x;
        case Kind::negate:
            return -eval_node(*n.lhs, x);
        case Kind::add:
            return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
        case Kind::sub:
            return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
        case Kind::mul:
            return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
        case Kind::div: {
            double num = eval_node(*n.lhs, x);
            double den = eval_node(*n.rhs, x);
            if (den == 0.0) throw DomainError("division by zero");
            return num / den;
        }
        case Kind::pow:
            return std::pow(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
        case Kind::call: {
            double a = eval_node(*n.lhs, x);
            switch (n.fn) {
                case Func::sin: return std::sin(a);
                case Func::cos: return std::cos(a);
                case Func::tan: return std::tan(a);
                case Func::exp: return std::exp(a);
                case Func::log:
                    if (a <= 0.0) throw DomainError("log of non-positive value");
                    return std::log(a);
                case Func::sqrt:
                    if (a < 0.0) throw DomainError("sqrt of negative value");
                    return std::sqrt(a);
                case Func::sinh: return std::sinh(a);
                case Func::cosh: return std::cosh(a);
                case Func::abs: return std::fabs(a);
            }
            throw DomainError("unreachable function kind");
        }
    }
    throw DomainError("unreachable node kind");
}

struct FuncName {
    std::string_view name;
    Func fn;
};

constexpr std::array<FuncName, 9> kFuncNames{{
    {"sin", Func::sin}, {"cos", Func::cos}, {"tan", Func::tan},
    {"exp", Func::exp}, {"log", Func::log}, {"sqrt", Func::sqrt},
    {"sinh", Func::sinh}, {"cosh", Func::cosh}, {"abs", Func::abs},
}};

std::string_view func_name(Func fn) {
    for (const auto& f : kFuncNames)
        if (f.fn == fn) return f.name;
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty expression", 0);
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool eat(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (eat('+'))
                lhs = make_node({Kind::add, 0.0, Func::sin, lhs, parse_term()});
            else if (eat('-'))
                lhs = make_node({Kind::sub, 0.0, Func::sin, lhs, parse_term()});
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            if (eat('*'))
                lhs = make_node({Kind::mul, 0.0, Func::sin, lhs, parse_factor()});
            else if (eat('/'))
                lhs = make_node({Kind::div, 0.0, Func::sin, lhs, parse_factor()});
            else
                return lhs;
        }
    }

    NodePtr parse_factor() {
        if (eat('-'))
            return make_node({Kind::negate, 0.0, Func::sin, parse_factor(), nullptr});
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (eat('^'))
            return make_node({Kind::pow, 0.0, Func::sin, base, parse_factor()});
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (eat('(')) {
            NodePtr e = parse_expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t frac = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == frac) throw ParseError("expected digits after decimal point", pos_);
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == digits) {
                // Not an exponent after all; an identifier like "exp" may follow.
                pos_ = mark;
            }
        }
        double value = 0.0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc{} || res.ptr != text_.data() + pos_)
            throw ParseError("malformed number literal", start);
        return make_node({Kind::number, value, Func::sin, nullptr, nullptr});
    }

    NodePtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x")
            return make_node({Kind::variable, 0.0, Func::sin, nullptr, nullptr});
        for (const auto& f : kFuncNames) {
            if (name == f.name) {
                expect('(', "'(' after function name");
                NodePtr arg = parse_expr();
                expect(')', "')'");
                return make_node({Kind::call, 0.0, f.fn, arg, nullptr});
            }
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
};

// Precedence levels used by the printer; must agree with the parser.
int precedence(const Node& n) {
    switch (n.kind) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::negate: return 3;
        case Kind::pow: return 4;
        case Kind::number:
            // A negative literal renders with a leading '-', so it binds
            // like a unary minus, not like an atom.
            return std::signbit(n.value) ? 3 : 5;
        default: return 5; // atoms
    }
}

void print_node(const Node& n, std::string& out);

void print_child(const NodePtr& child, int min_prec, std::string& out) {
    bool parens = precedence(*child) < min_prec;
    if (parens) out += '(';
    print_node(*child, out);
    if (parens) out += ')';
}

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case Kind::number: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out += buf;
            return;
        }
        case Kind::variable:
            out += 'x';
            return;
        case Kind::negate:
            out += '-';
            print_child(n.lhs, 3, out);
            return;
        case Kind::add:
        case Kind::sub:
        case Kind::mul:
        case Kind::div: {
            int p = precedence(n);
            print_child(n.lhs, p, out);
            out += n.kind == Kind::add ? '+' : n.kind == Kind::sub ? '-'
                 : n.kind == Kind::mul ? '*' : '/';
            // - and / are left-associative: an equal-precedence right child
            // must keep its parentheses.
            print_child(n.rhs, p + 1, out);
            return;
        }
        case Kind::pow:
            // The base must be an atom; the exponent re-enters at factor
            // level, so unary minus and nested powers stay bare.
            print_child(n.lhs, 5, out);
            out += '^';
            print_child(n.rhs, 3, out);
            return;
        case Kind::call:
            out += func_name(n.fn);
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
    }
}

} // namespace

double Expression::eval(double x) const {
    if (!root_) throw DomainError("evaluating an empty expression");
    double r = eval_node(*root_, x);
    if (!std::isfinite(r)) throw DomainError("expression evaluated to a non-finite value");
    return r;
}

std::string Expression::str() const {
    if (!root_) return "";
    std::string out;
    print_node(*root_, out);
    return out;
}

Expression parse_expression(std::string_view text) {
    return Expression(Parser(text).run());
}

Expression number_expr(double value) {
    return Expression(make_node({Kind::number, value, Func::sin, nullptr, nullptr}));
}

Expression variable_expr() {
    return Expression(make_node({Kind::variable, 0.0, Func::sin, nullptr, nullptr}));
}

Expression negate_expr(Expression operand) {
    return Expression(make_node({Kind::negate, 0.0, Func::sin, operand.root(), nullptr}));
}

Expression binary_expr(char op, Expression lhs, Expression rhs) {
    Kind k;
    switch (op) {
        case '+': k = Kind::add; break;
        case '-': k = Kind::sub; break;
        case '*': k = Kind::mul; break;
        case '/': k = Kind::div; break;
        case '^': k = Kind::pow; break;
        default: throw std::invalid_argument("binary_expr: unsupported operator");
    }
    return Expression(make_node({k, 0.0, Func::sin, lhs.root(), rhs.root()}));
}

Expression call_expr(Func fn, Expression argument) {
    return Expression(make_node({Kind::call, 0.0, fn, argument.root(), nullptr}));
}

} // namespace dtmm
