#include "tautcalc/coefficient.hpp"
#include "tautcalc/linear_algebra.hpp"

#include <doctest.h>

using namespace tautcalc;

TEST_CASE("rationals print reduced with positive denominator")
{
    CHECK(to_string(Rational(6, -4)) == "-3/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("coefficients stay canonical")
{
    Coefficient g = Coefficient::genus();
    CHECK(g.degree() == 1);
    Coefficient zero = g - g;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coefficients().empty());
    CHECK((Coefficient{Rational(1), Rational(0), Rational(0)}).degree() == 0);

    Coefficient two_g_minus_two = Coefficient(2) * g - Coefficient(2);
    CHECK(two_g_minus_two.to_string() == "-2 + 2*g");
    CHECK((g * g - Coefficient(1)).to_string() == "-1 + g^2");
    CHECK(two_g_minus_two.evaluate(4) == 6);
    CHECK((-two_g_minus_two).to_string() == "2 - 2*g");
}

TEST_CASE("coefficient ring axioms on a small sample")
{
    const Coefficient g = Coefficient::genus();
    std::vector<Coefficient> sample{Coefficient(0), Coefficient(1), Coefficient(Rational(-1, 3)), g,
                                    g * g - Coefficient(2) * g, Coefficient{Rational(1, 2), Rational(0), Rational(5)}};
    for (const auto& a : sample)
        for (const auto& b : sample) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const auto& c : sample) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
            // evaluation is a ring homomorphism
            CHECK((a * b).evaluate(7) == a.evaluate(7) * b.evaluate(7));
        }
}

TEST_CASE("row reduced basis keeps fully reduced echelon form")
{
    RowReducedBasis basis(3);
    CHECK(basis.insert({2, 4, 6}));
    CHECK_FALSE(basis.insert({1, 2, 3}));
    CHECK(basis.insert({0, 1, 1}));
    CHECK(basis.rank() == 2);
    CHECK(basis.pivots() == std::vector<std::size_t>{0, 1});
    CHECK(basis.rows()[0] == RationalVector{1, 0, 1});
    CHECK(basis.rows()[1] == RationalVector{0, 1, 1});
    CHECK(basis.contains({3, 5, 8}));
    CHECK_FALSE(basis.contains({0, 0, 1}));

    auto r = basis.reduce({3, 5, 9});
    CHECK(r.residual == RationalVector{0, 0, 1});
    CHECK(r.coordinates == RationalVector{3, 5});
}

TEST_CASE("stored basis depends only on the row space")
{
    RowReducedBasis a(3), b(3);
    a.insert({1, 1, 0});
    a.insert({0, 1, 1});
    b.insert({1, 2, 1});
    b.insert({1, 0, -1});
    CHECK(a.rows() == b.rows());
}

TEST_CASE("nullspace and solve")
{
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}};
    auto ns = nullspace(m, 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        Rational dot = 0;
        for (std::size_t k = 0; k < 3; ++k) dot += m[0][k] * v[k];
        CHECK(dot == 0);
    }
    CHECK(nullspace({{1, 0}, {0, 1}}, 2).empty());
    CHECK(rank(m) == 1);

    auto x = solve({{1, 1}, {1, -1}}, {3, 1});
    REQUIRE(x);
    CHECK(*x == RationalVector{2, 1});
    CHECK_FALSE(solve({{1, 1}, {1, 1}}, {1, 2}));
}
