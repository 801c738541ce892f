#include "tautcalc/relations.hpp"

#include <doctest.h>

#include <set>

using namespace tautcalc;

namespace {

// Number of monomials of bidegree (c, j): coefficient of x^c y^(c-j) in
// prod_i 1/(1 - x^i y) * prod_i 1/(1 - x^i), by dynamic programming.
long count_monomials(int c, int j)
{
    const int k = c - j;  // number of p-factors
    if (k < 0 || j < 0) return 0;
    // table[codim][p-count]
    std::vector<std::vector<long>> t(c + 1, std::vector<long>(k + 1, 0));
    t[0][0] = 1;
    for (int i = 1; i <= c; ++i) {
        // p_i: codim i, one p-factor
        for (int a = i; a <= c; ++a)
            for (int b = 1; b <= k; ++b) t[a][b] += t[a - i][b - 1];
        // q_i: codim i, no p-factor
        for (int a = i; a <= c; ++a)
            for (int b = 0; b <= k; ++b) t[a][b] += t[a - i][b];
    }
    return t[c][k];
}

TautElement numeric_w(int genus) { return substitute_genus(TautElement::w_cycle(), genus); }

}  // namespace

TEST_CASE("monomial enumeration is complete and duplicate free")
{
    for (int c = 0; c <= 9; ++c)
        for (int j = 0; j <= c; ++j) {
            auto ms = enumerate_monomials({c, j});
            CHECK(static_cast<long>(ms.size()) == count_monomials(c, j));
            std::set<TautMonomial> unique(ms.begin(), ms.end());
            CHECK(unique.size() == ms.size());
            for (const auto& m : ms) CHECK(m.bidegree() == Bidegree{c, j});
        }
    CHECK(enumerate_monomials({2, 3}).empty());
    CHECK(enumerate_monomials({2, 2}).size() == 2);  // q1^2, q2
}

TEST_CASE("dimension seeds")
{
    auto seeds = dimension_seeds(3, 5);
    long expected = 0;
    for (int c = 4; c <= 5; ++c)
        for (int j = 0; j <= c; ++j) expected += count_monomials(c, j);
    CHECK(static_cast<long>(seeds.size()) == expected);
    for (const auto& m : seeds) {
        CHECK(m.codim() > 3);
        CHECK(m.codim() <= 5);
    }
    CHECK(dimension_seeds(4, 4).empty());
}

TEST_CASE("genus ladder for W")
{
    SUBCASE("genus 2, bound 5")
    {
        RelationSpan span(2, 5);
        Verdict v = check_w(span);
        CHECK(v.flag == VerdictFlag::DerivedZero);
        CHECK(span.dimension({2, 2}) == 2);
        CHECK(v.residual.is_zero());
    }
    SUBCASE("genus 3, bound 7")
    {
        RelationSpan span(3, 7);
        Verdict v = check_w(span);
        CHECK(v.flag == VerdictFlag::DerivedZero);
        REQUIRE(span.dimension({2, 2}) == 1);
        auto rel = span.relations({2, 2});
        CHECK(rel[0] == TautElement::q(1, 2) - Coefficient(4) * TautElement::q(2));
        CHECK(v.coordinates == RationalVector{2});
    }
    SUBCASE("genus 4 and 5")
    {
        for (int genus : {4, 5}) {
            RelationSpan span(genus, default_bound(genus));
            Verdict v = check_w(span);
            CHECK(v.flag == VerdictFlag::NotDerived);
            CHECK(span.dimension({2, 2}) == 0);
            CHECK(v.residual == numeric_w(genus));
        }
    }
}

TEST_CASE("everything above the dimension is a relation")
{
    RelationSpan span(3, 6);
    for (const auto& b : span.bidegrees())
        if (b.codim > 3) CHECK(span.rows(b).full());
}

TEST_CASE("span grows monotonically with the bound")
{
    for (int genus : {2, 3}) {
        std::vector<RelationSpan> spans;
        for (int bound = genus; bound <= genus + 4; ++bound) spans.emplace_back(genus, bound);
        for (std::size_t k = 1; k < spans.size(); ++k)
            for (const auto& b : spans[k - 1].bidegrees()) {
                CHECK(spans[k - 1].dimension(b) <= spans[k].dimension(b));
                for (const auto& r : spans[k - 1].relations(b)) CHECK(spans[k].rows(b).contains(spans[k].to_vector(r, b)));
            }
    }
}

TEST_CASE("closure is idempotent and deterministic")
{
    RelationSpan a(3, 7), b(3, 7);
    CHECK(a.saturate() == 0);
    for (const auto& bd : a.bidegrees()) {
        CHECK(a.rows(bd).rows() == b.rows(bd).rows());
        CHECK(a.columns(bd) == b.columns(bd));
    }
    CHECK(a.derivation().size() == b.derivation().size());
}

TEST_CASE("derivation log replays")
{
    for (int genus : {2, 3, 4}) {
        RelationSpan span(genus, genus + 3);
        CHECK(span.replay_check().empty());
    }
}

TEST_CASE("derivation of the genus 3 relation goes through D twice")
{
    RelationSpan span(3, 7);
    auto steps = span.steps_in({2, 2});
    REQUIRE_FALSE(steps.empty());
    bool found = false;
    for (auto s : steps) {
        auto chain = span.ancestry(s);
        const auto& root = span.derivation()[chain.front()];
        if (root.kind == DerivationStep::Kind::Seed && root.element == TautElement::p(2, 2) && chain.size() == 3)
            found = true;
    }
    CHECK(found);
}

TEST_CASE("vector round trip")
{
    RelationSpan span(2, 4);
    Bidegree b{3, 2};
    TautElement x = Coefficient(3) * TautElement::p(3) - TautElement::q(1) * TautElement::p(2);
    CHECK(span.to_element(span.to_vector(x, b), b) == x);
}

TEST_CASE("membership errors")
{
    RelationSpan span(2, 5);
    CHECK_THROWS_AS(membership(TautElement::w_cycle(), span), std::invalid_argument);
    CHECK_THROWS_AS(membership(TautElement::p(1) + TautElement::q(1), span), std::invalid_argument);
    CHECK_THROWS_AS(membership(TautElement::q(6), span), BoundError);
    CHECK(membership(TautElement(), span).flag == VerdictFlag::DerivedZero);
    CHECK_THROWS_AS(RelationSpan(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(RelationSpan(3, 2), std::invalid_argument);
}
