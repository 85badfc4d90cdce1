#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace dtmm {

// Closed-form expressions in one variable `x`.
//
// Grammar (whitespace insignificant, "." as decimal separator):
//
//   expr   := term { ("+"|"-") term }
//   term   := factor { ("*"|"/") factor }
//   factor := "-" factor | power
//   power  := atom [ "^" factor ]
//   atom   := NUMBER | "x" | IDENT "(" expr ")" | "(" expr ")"
//   IDENT  := sin | cos | tan | exp | log | sqrt | sinh | cosh | abs
//   NUMBER := digits [ "." digits ] [ ("e"|"E") ["+"|"-"] digits ]
//
// "^" is right-associative and binds tighter than unary minus, so
// "-x^2" is -(x^2) and "2^-3" is 1/8.

enum class Func { sin, cos, tan, exp, log, sqrt, sinh, cosh, abs };

class Expression {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    enum class Kind { number, variable, negate, add, sub, mul, div, pow, call };

    struct Node {
        Kind kind;
        double value = 0.0;   // Kind::number
        Func fn = Func::sin;  // Kind::call
        NodePtr lhs;          // operand / left operand / call argument
        NodePtr rhs;          // right operand of binary ops
    };

    Expression() = default;
    explicit Expression(NodePtr root) : root_(std::move(root)) {}

    bool empty() const noexcept { return root_ == nullptr; }
    const NodePtr& root() const noexcept { return root_; }

    // IEEE-style evaluation at a point. Throws DomainError for log of a
    // non-positive value, sqrt of a negative value, division by zero, or a
    // non-finite final result.
    double eval(double x) const;

    // Renders the tree so that parsing the result evaluates identically.
    std::string str() const;

private:
    NodePtr root_;
};

// Parses `text` per the grammar above. Throws ParseError (with byte offset)
// on malformed input or an unknown function name.
Expression parse_expression(std::string_view text);

// Node builders, used by the band scanner and by generative tests.
Expression number_expr(double value);
Expression variable_expr();
Expression negate_expr(Expression operand);
Expression binary_expr(char op, Expression lhs, Expression rhs); // op in +-*/^
Expression call_expr(Func fn, Expression argument);

} // namespace dtmm
