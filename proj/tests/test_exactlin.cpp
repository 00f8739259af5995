#include "oracle.hpp"
#include "polyred/random_instances.hpp"
#include "polyred/subspace.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace polyred;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(10, 5).is_integer());
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic stays exact") {
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(third * Rational(3) - Rational(1) == Rational(0));
    CHECK(Rational(-1, 3) < Rational(-1, 4));
    CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
}

TEST_CASE("rref and rank on a hand matrix") {
    Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    RrefResult r = rref_pivots(m);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.form == Matrix{{1, 0, 1}, {0, 1, 1}});
    CHECK(rank(m) == 2);
    CHECK(rref(m).rows() == 3);
}

TEST_CASE("inverse and singular input") {
    Matrix m{{2, 1}, {1, 1}};
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST_CASE("skew check and bilinear pairing") {
    Matrix w{{0, 1}, {-1, 0}};
    CHECK(w.is_skew());
    CHECK_FALSE(Matrix({{0, 1}, {1, 0}}).is_skew());
    CHECK(bilinear(w, Vec{1, 0}, Vec{0, 1}) == Rational(1));
}

TEST_CASE("subspace canonical basis identifies equal spans") {
    Subspace a = Subspace::span({Vec{1, 1, 0}, Vec{0, 1, 1}}, 3);
    Subspace b = Subspace::span({Vec{1, 2, 1}, Vec{1, 0, -1}}, 3);
    CHECK(a == b);
    CHECK(a.contains(Vec{2, 3, 1}));
    CHECK_FALSE(a.contains(Vec{0, 0, 1}));
    CHECK(Subspace::coordinate(4, {1, 3}).dim() == 2);
    CHECK(Subspace(3).is_zero());
    CHECK(Subspace::whole(3).is_whole());
}

TEST_CASE("intersection agrees with the Zassenhaus oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 7));
        std::vector<Vec> ga, gb;
        long ma = uniform_int(rng, 0, static_cast<long>(n)), mb = uniform_int(rng, 0, static_cast<long>(n));
        for (long i = 0; i < ma; ++i) ga.push_back(sparse_vector(rng, n, 40));
        for (long i = 0; i < mb; ++i) gb.push_back(sparse_vector(rng, n, 40));
        Subspace a = Subspace::span(ga, n), b = Subspace::span(gb, n);
        Subspace cap = subspace_intersect(a, b);
        auto expected = oracle::zassenhaus_intersection(ga, gb, n);
        CHECK(cap.dim() == oracle::rank(expected, n));
        CHECK(oracle::same_span(cap.vectors(), expected, n));
        // dimension formula ties sum and intersection together
        CHECK(subspace_sum(a, b).dim() + cap.dim() == a.dim() + b.dim());
    }
}

TEST_CASE("membership agrees with brute-force rank") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        std::vector<Vec> g;
        for (long i = 0; i < uniform_int(rng, 0, 4); ++i) g.push_back(sparse_vector(rng, n, 50));
        Subspace s = Subspace::span(g, n);
        Vec v = sparse_vector(rng, n, 50);
        CHECK(s.contains(v) == oracle::in_span(g, v, n));
        CHECK(s.dim() == oracle::rank(g, n));
    }
}

TEST_CASE("nullspace and annihilator") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(uniform_int(rng, 1, 5)), c = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform_int(rng, -2, 2);
        Subspace k = nullspace(m);
        CHECK(k.dim() == c - oracle::rank(m.row_list(), c));
        for (const auto& v : k.vectors()) CHECK(is_zero(m * v));
        Subspace s = Subspace::span(m);
        CHECK(s.annihilator().annihilator() == s);
        CHECK(s.annihilator() == k);
    }
}

TEST_CASE("quotient map kills B and has the right rank") {
    Subspace a = Subspace::coordinate(4, {0, 1, 2});
    Subspace b = Subspace::span({Vec{1, 1, 0, 0}}, 4);
    QuotientMap q = quotient_map(a, b);
    CHECK(q.projected_dim == 2);
    CHECK(is_zero(q.project(Vec{2, 2, 0, 0})));
    CHECK_FALSE(is_zero(q.project(Vec{0, 0, 1, 0})));
    CHECK(q.project(Vec{1, 0, 0, 0}) == q.project(Vec{0, -1, 0, 0}));
    CHECK_THROWS_AS(quotient_map(b, a), std::invalid_argument);
}

TEST_CASE("quotient map properties on random nested pairs") {
    Rng rng(19);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        std::vector<Vec> ga;
        for (long i = 0; i < uniform_int(rng, 1, 4); ++i) ga.push_back(sparse_vector(rng, n, 30));
        std::vector<Vec> gb(ga.begin(), ga.begin() + uniform_int(rng, 0, static_cast<long>(ga.size())));
        Subspace a = Subspace::span(ga, n), b = Subspace::span(gb, n);
        QuotientMap q = quotient_map(a, b);
        CHECK(q.projected_dim == a.dim() - b.dim());
        for (const auto& v : b.vectors()) CHECK(is_zero(q.project(v)));
        // the complement rows map onto the unit vectors
        for (std::size_t i = 0; i < q.complement.rows(); ++i)
            CHECK(q.project(q.complement.row(i)) == unit_vector(q.projected_dim, i));
    }
}

TEST_CASE("linear solve returns particular and homogeneous parts") {
    Matrix m{{1, 1, 0}, {0, 1, 1}};
    auto sol = solve_linear(m, Vec{2, 3});
    REQUIRE(sol);
    CHECK(m * sol->particular == Vec{2, 3});
    CHECK(sol->homogeneous.dim() == 1);
    CHECK_FALSE(solve_linear(Matrix{{1, 1}, {2, 2}}, Vec{1, 3}));
}

TEST_CASE("image and direct product") {
    Matrix swap{{0, 1}, {1, 0}};
    CHECK(image(swap, Subspace::coordinate(2, {0})) == Subspace::coordinate(2, {1}));
    Subspace p = direct_product(Subspace::coordinate(2, {0}), Subspace::whole(1));
    CHECK(p == Subspace::coordinate(3, {0, 2}));
}
