#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dtmm/errors.hpp"
#include "dtmm/expression.hpp"

using dtmm::Expression;
using dtmm::parse_expression;

static double ev(const char* text, double x = 0.0) {
    return parse_expression(text).eval(x);
}

TEST_CASE("arithmetic precedence and associativity") {
    CHECK(ev("2+3*4") == 14.0);
    CHECK(ev("2*3+4*5") == 26.0);
    CHECK(ev("6/3/2") == 1.0);
    CHECK(ev("10-4-3") == 3.0);
    CHECK(ev("2^3^2") == 512.0);   // right-associative
    CHECK(ev("2^-3") == 0.125);    // exponent may be a signed factor
    CHECK(ev("-3^2") == -9.0);     // ^ binds tighter than unary minus
    CHECK(ev("(-3)^2") == 9.0);
    CHECK(ev("--5") == 5.0);
    CHECK(ev("2*-3") == -6.0);
}

TEST_CASE("numbers") {
    CHECK(ev("42") == 42.0);
    CHECK(ev("3.25") == 3.25);
    CHECK(ev("1e3") == 1000.0);
    CHECK(ev("2.5E-2") == 0.025);
    CHECK(ev("1.5e+1") == 15.0);
}

TEST_CASE("variable and whitespace") {
    CHECK(ev("x", 7.5) == 7.5);
    CHECK(ev("  2 * x  +  1 ", 3.0) == 7.0);
    CHECK(ev("x*x - x", 4.0) == 12.0);
}

TEST_CASE("functions match the standard library") {
    for (double x : {0.1, 0.7, 1.9, 3.4}) {
        CHECK(ev("sin(x)", x) == std::sin(x));
        CHECK(ev("cos(x)", x) == std::cos(x));
        CHECK(ev("tan(x)", x) == std::tan(x));
        CHECK(ev("exp(x)", x) == std::exp(x));
        CHECK(ev("log(x)", x) == std::log(x));
        CHECK(ev("sqrt(x)", x) == std::sqrt(x));
        CHECK(ev("sinh(x)", x) == std::sinh(x));
        CHECK(ev("cosh(x)", x) == std::cosh(x));
        CHECK(ev("abs(0-x)", x) == x);
    }
    CHECK(ev("cos(sin(x))+1", 0.5) == std::cos(std::sin(0.5)) + 1.0);
}

TEST_CASE("parse errors carry a byte offset") {
    auto offset_of = [](const char* text) {
        try {
            parse_expression(text);
        } catch (const dtmm::ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("2+") == 2);
    CHECK(offset_of("(2") == 2);
    CHECK(offset_of("2 3") == 2);
    CHECK(offset_of("x +") == 3);
    CHECK(offset_of(".5") == 0);      // numbers need a leading digit
    CHECK(offset_of("foo(2)") >= 0);  // unknown function
    CHECK(offset_of("sin()") >= 0);
    CHECK(offset_of("sin 2") >= 0);   // call requires parentheses
    CHECK(offset_of("2*") == 2);
    CHECK(offset_of("1..2") >= 0);
}

TEST_CASE("evaluation domain errors") {
    CHECK_THROWS_AS(ev("log(0)"), dtmm::DomainError);
    CHECK_THROWS_AS(ev("log(0-1)"), dtmm::DomainError);
    CHECK_THROWS_AS(ev("sqrt(0-1)"), dtmm::DomainError);
    CHECK_THROWS_AS(ev("1/0"), dtmm::DomainError);
    CHECK_THROWS_AS(ev("1/x", 0.0), dtmm::DomainError);
    CHECK_THROWS_AS(ev("exp(1000)"), dtmm::DomainError);  // non-finite result
    CHECK(ev("sqrt(0)") == 0.0);
    CHECK(ev("log(1)") == 0.0);
}

TEST_CASE("str() renders a reparsable equivalent") {
    const char* cases[] = {
        "2+3*4", "-x^2", "(-3)^2", "2^3^2", "x*(x+1)/(x-9)",
        "sin(cos(x))-exp(0-x)", "1-2-3", "2^-3", "-(x+1)*2", "x/2/3",
    };
    for (const char* text : cases) {
        Expression e = parse_expression(text);
        Expression r = parse_expression(e.str());
        for (double x : {-1.7, 0.3, 2.9})
            CHECK(r.eval(x) == e.eval(x));
    }
}

namespace {

// Random trees over the total operations only, so evaluation never throws.
Expression random_tree(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    std::uniform_real_distribution<double> num(-3.0, 3.0);
    switch (pick(rng)) {
        case 0: return dtmm::number_expr(num(rng));
        case 1: return dtmm::variable_expr();
        case 2: return dtmm::negate_expr(random_tree(rng, depth - 1));
        case 3:
            return dtmm::binary_expr('+', random_tree(rng, depth - 1),
                                     random_tree(rng, depth - 1));
        case 4:
            return dtmm::binary_expr('-', random_tree(rng, depth - 1),
                                     random_tree(rng, depth - 1));
        case 5:
            return dtmm::binary_expr('*', random_tree(rng, depth - 1),
                                     random_tree(rng, depth - 1));
        default: {
            std::uniform_int_distribution<int> f(0, 1);
            return dtmm::call_expr(f(rng) ? dtmm::Func::sin : dtmm::Func::cos,
                                   random_tree(rng, depth - 1));
        }
    }
}

} // namespace

TEST_CASE("print-parse round trip on random trees") {
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> xs(-2.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        Expression e = random_tree(rng, 5);
        Expression r = parse_expression(e.str());
        for (int j = 0; j < 4; ++j) {
            double x = xs(rng);
            CHECK(r.eval(x) == e.eval(x));
        }
    }
}

TEST_CASE("negative literal as a power base keeps its parentheses") {
    Expression e = dtmm::binary_expr('^', dtmm::number_expr(-2.0), dtmm::number_expr(2.0));
    CHECK(e.eval(0.0) == 4.0);
    CHECK(parse_expression(e.str()).eval(0.0) == 4.0);
}
