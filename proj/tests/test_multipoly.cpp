#include "polyred/multipoly.hpp"
#include "polyred/random_instances.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace polyred;

namespace {
const std::vector<std::string> kVars = {"x", "y", "z"};
}

TEST_CASE("parse and print") {
    MultiPoly p = parse_poly("1/2*x^2*y - 3*z + 2", kVars);
    CHECK(p.to_string() == "1/2*x^2*y - 3*z + 2");
    CHECK(p.degree() == 3);
    CHECK(parse_poly("(x + y)^2", kVars) == parse_poly("x^2 + 2*x*y + y^2", kVars));
    CHECK(parse_poly("-(x - 1)", kVars) == parse_poly("1 - x", kVars));
    CHECK(parse_poly("0", kVars).is_zero());
    CHECK_THROWS_AS(parse_poly("x + w", kVars), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x +", kVars), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("(x", kVars), std::invalid_argument);
}

TEST_CASE("derivative, evaluation, substitution") {
    MultiPoly p = parse_poly("x^3*y + y*z", kVars);
    CHECK(p.derivative("x") == parse_poly("3*x^2*y", kVars));
    CHECK(p.derivative(2) == parse_poly("y", kVars));
    CHECK(p.evaluate({2, 3, Rational(1, 3)}) == Rational(25));
    CHECK(p.substitute("y", 2) == parse_poly("2*x^3 + 2*z", kVars));
    CHECK(p.independent_of("z") == false);
    CHECK(parse_poly("x", kVars).independent_of("y"));
}

TEST_CASE("compose and rebase") {
    MultiPoly p = parse_poly("x*y", kVars);
    std::vector<std::string> uv = {"u", "v"};
    MultiPoly c = p.compose({parse_poly("u + v", uv), parse_poly("u - v", uv), MultiPoly(uv)});
    CHECK(c == parse_poly("u^2 - v^2", uv));
    MultiPoly r = parse_poly("x + 1", kVars).rebase({"w", "x"});
    CHECK(r.to_string() == "x + 1");
    CHECK_THROWS_AS(p.rebase({"x"}), std::invalid_argument);
}

TEST_CASE("property: ring laws and Leibniz rule at random points") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly a = random_polynomial(rng, kVars, kVars, 3, 5, 3);
        MultiPoly b = random_polynomial(rng, kVars, kVars, 3, 5, 3);
        MultiPoly c = random_polynomial(rng, kVars, kVars, 2, 4, 3);
        Vec pt = random_vector(rng, 3, 4);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        for (const auto& v : kVars) CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
        // mixed partials commute
        CHECK(a.derivative("x").derivative("y") == a.derivative("y").derivative("x"));
        // printing and parsing round-trips
        CHECK(parse_poly(a.to_string(), kVars) == a);
    }
}

TEST_CASE("random polynomial respects its support") {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly p = random_polynomial(rng, kVars, {"y"}, 3, 4, 2);
        CHECK(p.independent_of("x"));
        CHECK(p.independent_of("z"));
        CHECK(p.degree() <= 3);
    }
}

TEST_CASE("mismatched variable lists are rejected") {
    MultiPoly a = parse_poly("x", kVars);
    MultiPoly b = parse_poly("u", {"u"});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}
