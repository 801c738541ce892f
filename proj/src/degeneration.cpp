#include "tautcalc/degeneration.hpp"

#include <stdexcept>

namespace tautcalc {

namespace {

constexpr std::size_t kJ1 = 0, kC1 = 1, kJ2 = 2, kC2 = 3, kJ0 = 4;

Rational factorial(int n)
{
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

CohomClass point_class(int h) { return CohomClass::on_factor({Factor::abelian(h)}, 0, Factor::abelian(h).top()); }

bool has_extra(const FamilyConfig& c) { return c.extra_genus > 0; }

// Pads a class on (J1, C1, J2, C2) with the point class of J0 when present.
CohomClass with_constant_part(const CohomClass& x, const FamilyConfig& c)
{
    if (!has_extra(c)) return x;
    return tensor(x, point_class(c.extra_genus));
}

}  // namespace

FamilyConfig FamilyConfig::for_genus(int genus)
{
    if (genus < 4) throw std::invalid_argument("test families need genus at least 4");
    return FamilyConfig{2, 2, genus - 4};
}

FactorSpec FamilyConfig::spec() const
{
    FactorSpec s{Factor::abelian(genus1, "J1"), Factor::curve(genus1, "C1"), Factor::abelian(genus2, "J2"),
                 Factor::curve(genus2, "C2")};
    if (extra_genus > 0) s.push_back(Factor::abelian(extra_genus, "J0"));
    return s;
}

std::vector<std::size_t> FamilyConfig::abelian_factors() const
{
    std::vector<std::size_t> v{kJ1, kJ2};
    if (extra_genus > 0) v.push_back(kJ0);
    return v;
}

std::vector<std::size_t> FamilyConfig::curve_factors() const { return {kC1, kC2}; }

KunnethIndex FamilyConfig::index(int a1, int b1, int a2, int b2) const
{
    KunnethIndex k{a1, b1, a2, b2};
    if (extra_genus > 0) k.push_back(0);
    return k;
}

CohomClass curve_class_in_jacobian(int h)
{
    if (h < 1) throw std::invalid_argument("genus must be positive");
    FactorSpec spec{Factor::abelian(h)};
    return (1 / factorial(h - 1)) * CohomClass::theta(spec, 0).pow(h - 1);
}

CohomClass translated_curve_class(int h)
{
    // {(u, x) : u + AJ(x) in C}
    CohomClass c = coproduct(curve_class_in_jacobian(h), 0);
    return aj_transfer(c, 1);
}

CohomClass aj_graph_class(int h)
{
    const FactorSpec spec{Factor::abelian(h, "J"), Factor::curve(h, "C")};
    const FactorSpec target{Factor::curve(h, "C")};
    const Factor& j = spec[0];
    const Factor& c = spec[1];
    GeneratorImages hom{target, {{}, {}}};
    for (int i = 1; i <= h; ++i) {
        hom.images[0].emplace(j.alpha(i), CohomClass::on_factor(target, 0, c.alpha(i)));
        hom.images[0].emplace(j.beta(i), CohomClass::on_factor(target, 0, c.beta(i)));
        hom.images[1].emplace(c.alpha(i), CohomClass::on_factor(target, 0, c.alpha(i)));
        hom.images[1].emplace(c.beta(i), CohomClass::on_factor(target, 0, c.beta(i)));
    }
    hom.images[1].emplace(c.top(), CohomClass::on_factor(target, 0, c.top()));

    std::vector<Rational> functional;
    for (const auto& key : all_keys(spec))
        functional.push_back(integrate_all(apply_homomorphism(CohomClass::basis(spec, key), hom)));
    return poincare_dual(spec, functional);
}

TestFamilyClasses test_family_classes(const FamilyConfig& config)
{
    if (config.genus1 < 1 || config.genus2 < 1 || config.extra_genus < 0)
        throw std::invalid_argument("invalid genus split");
    const int h1 = config.genus1, h2 = config.genus2;
    const FactorSpec curve2{Factor::curve(h2)};

    const CohomClass psi3 = translated_curve_class(h1);
    const CohomClass graph = aj_graph_class(h2);
    const CohomClass point1 = tensor(point_class(h1), CohomClass::unit({Factor::curve(h1)}));
    const CohomClass curve_in_j2 = tensor(curve_class_in_jacobian(h2), CohomClass::unit(curve2));

    TestFamilyClasses out;
    out.config = config;
    // (z, x, y) -> (z - x, y - c, x, y)
    out.psi1 = with_constant_part(tensor(psi3, graph), config);
    // (w, x, y) -> (0, w - c, x, y)
    out.psi2 = with_constant_part(tensor(point1, curve_in_j2), config);
    // (z, x, y) -> (z - x, c - y, x, y)
    out.psi1_primed = with_constant_part(tensor(psi3, negation(graph, 0)), config);
    // (w, x, y) -> (0, w - y, x, y)
    out.psi2_primed = with_constant_part(tensor(point1, translated_curve_class(h2)), config);

    const FactorSpec spec = config.spec();
    out.constant_part = CohomClass(spec);
    if (has_extra(config)) {
        // the constant component C0 sits over the origin of J1 x J2
        CohomClass base = tensor(point1, tensor(point_class(h2), CohomClass::unit(curve2)));
        out.constant_part = tensor(base, curve_class_in_jacobian(config.extra_genus));
    }
    out.curve = out.psi1 + out.psi2 + out.constant_part;
    out.curve_primed = out.psi1_primed + out.psi2_primed + out.constant_part;
    return out;
}

CohomClass base_degree_component(const CohomClass& x, const FamilyConfig& config, int i)
{
    auto c = config.curve_factors();
    return partial_degree_component(x, {c.begin(), c.end()}, i);
}

CohomClass q_bar(const TestFamilyClasses& families, int i, bool primed)
{
    if (i < 0 || i > 2) throw std::invalid_argument("q_bar index must be 0, 1 or 2");
    const FamilyConfig& config = families.config;
    const CohomClass& curve = primed ? families.curve_primed : families.curve;
    CohomClass part = base_degree_component(curve, config, i);
    CohomClass lifted = cup(CohomClass::total_theta(config.spec()), part);
    auto fiber = config.abelian_factors();
    return fourier(lifted, {fiber.begin(), fiber.end()});
}

namespace {

IdentityCheck identity(std::string name, CohomClass lhs, CohomClass rhs)
{
    IdentityCheck c{std::move(name), lhs == rhs, std::move(lhs), std::move(rhs)};
    return c;
}

NonvanishingCheck nonvanishing(std::string name, CohomClass value)
{
    bool ok = !value.is_zero();
    return NonvanishingCheck{std::move(name), ok, std::move(value)};
}

struct SlotClasses {
    CohomClass q1_squared, q2, q1_primed_squared, q2_primed;
    CohomClass q1, q1_primed;
};

SlotClasses slot_classes(const FamilyConfig& config)
{
    TestFamilyClasses fam = test_family_classes(config);
    const KunnethIndex slot = config.index(1, 1, 1, 1);
    SlotClasses s;
    s.q1 = q_bar(fam, 1, false);
    s.q1_primed = q_bar(fam, 1, true);
    s.q1_squared = kunneth_component(s.q1.pow(2), slot);
    s.q1_primed_squared = kunneth_component(s.q1_primed.pow(2), slot);
    s.q2 = kunneth_component(q_bar(fam, 2, false), slot);
    s.q2_primed = kunneth_component(q_bar(fam, 2, true), slot);
    return s;
}

std::vector<TensorKey> union_keys(std::initializer_list<const CohomClass*> xs)
{
    std::set<TensorKey> keys;
    for (const auto* x : xs)
        for (const auto& [k, c] : x->terms()) keys.insert(k);
    return {keys.begin(), keys.end()};
}

}  // namespace

PropositionReport prop_calcul_check(const FamilyConfig& config)
{
    SlotClasses s = slot_classes(config);
    PropositionReport r;
    r.config = config;
    r.h1 = s.q2;
    r.h2 = kunneth_component(s.q1, config.index(0, 0, 1, 1));
    r.h3 = kunneth_component(s.q1, config.index(1, 1, 0, 0));
    r.h4 = kunneth_component(s.q1_primed, config.index(0, 0, 1, 1)) + r.h2;
    r.h2_cup_h3 = cup(r.h2, r.h3);
    r.h3_cup_h4 = cup(r.h3, r.h4);

    const Rational two = 2;
    r.identities.push_back(identity("q2_primed = -h1", s.q2_primed, -r.h1));
    r.identities.push_back(identity("q1^2 = 2 h2.h3", s.q1_squared, two * r.h2_cup_h3));
    r.identities.push_back(
        identity("q1_primed^2 = -2 h2.h3 + 2 h3.h4", s.q1_primed_squared, two * r.h3_cup_h4 - two * r.h2_cup_h3));
    r.identities.push_back(
        identity("h3_primed = h3", kunneth_component(s.q1_primed, config.index(1, 1, 0, 0)), r.h3));

    r.nonvanishing.push_back(nonvanishing("h1", r.h1));
    r.nonvanishing.push_back(nonvanishing("h2.h3", r.h2_cup_h3));
    r.nonvanishing.push_back(nonvanishing("h3.h4", r.h3_cup_h4));

    auto keys = union_keys({&r.h1, &r.h2_cup_h3});
    r.rank_h1_h2h3 = rank({coordinates(r.h1, keys), coordinates(r.h2_cup_h3, keys)});

    r.passed = true;
    for (const auto& c : r.identities) r.passed = r.passed && c.passed;
    for (const auto& c : r.nonvanishing) r.passed = r.passed && c.passed;
    return r;
}

KernelReport kernel_test(const FamilyConfig& config)
{
    SlotClasses s = slot_classes(config);
    KernelReport r;
    r.config = config;
    r.keys = union_keys({&s.q1_squared, &s.q2, &s.q1_primed_squared, &s.q2_primed});
    auto a = coordinates(s.q1_squared, r.keys), b = coordinates(s.q2, r.keys);
    auto ap = coordinates(s.q1_primed_squared, r.keys), bp = coordinates(s.q2_primed, r.keys);
    for (std::size_t k = 0; k < r.keys.size(); ++k) r.stacked.push_back({a[k], b[k]});
    for (std::size_t k = 0; k < r.keys.size(); ++k) r.stacked.push_back({ap[k], bp[k]});
    r.kernel = nullspace(r.stacked, 2);

    auto value = [&](const Rational& x, const Rational& y) {
        RationalVector v;
        for (const auto& row : r.stacked) v.push_back(x * row[0] + y * row[1]);
        return v;
    };
    const Rational g = config.total_genus();
    r.w_detected = !is_zero(value(1, -(2 * g - 2)));
    r.zero_vanishes = is_zero(value(0, 0));
    r.passed = r.kernel.empty() && r.w_detected && r.zero_vanishes;
    r.hypothesis = "Hom(J1, J2) = 0: no divisor class in H^1(C1) x H^1(C2), so the slot survives on open subsets of C1 x C2";
    return r;
}

}  // namespace tautcalc
