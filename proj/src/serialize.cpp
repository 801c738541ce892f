#include "tautcalc/serialize.hpp"

namespace tautcalc {

namespace {

const char* decoration_name(Decoration d)
{
    switch (d) {
    case Decoration::Unit: return "1";
    case Decoration::K: return "K";
    case Decoration::Point: return "x0";
    }
    return "?";
}

Json kunneth(const KunnethIndex& k)
{
    Json j = Json::array();
    for (int d : k) j.push_back(d);
    return j;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Coefficient& c)
{
    Json j = Json::array();
    for (const auto& v : c.coefficients()) j.push_back(to_string(v));
    return j;
}

Json to_json(const TautElement& x)
{
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"monomial", m.to_string()}, {"bidegree", to_json(m.bidegree())}, {"coefficient", to_json(c)}});
    return {{"text", x.to_string()}, {"terms", terms}};
}

Json to_json(const CurveClass& x)
{
    Json terms = Json::array();
    for (const auto& [p, c] : x.terms()) {
        Json blocks = Json::array();
        for (const auto& b : p.blocks()) {
            Json members = Json::array();
            for (int i = 0; i < p.n(); ++i)
                if (b.members & (1u << i)) members.push_back(i + 1);
            blocks.push_back({{"members", members}, {"decoration", decoration_name(b.decoration)}});
        }
        terms.push_back({{"class", p.to_string()}, {"blocks", blocks}, {"coefficient", to_json(c)}});
    }
    return {{"n", x.n()}, {"text", x.to_string()}, {"terms", terms}};
}

Json to_json(const FactorSpec& spec)
{
    Json j = Json::array();
    for (const auto& f : spec)
        j.push_back({{"label", f.label},
                     {"kind", f.kind == FactorKind::Curve ? "curve" : "abelian"},
                     {"genus", f.genus}});
    return j;
}

Json to_json(const CohomClass& x)
{
    Json terms = Json::object();
    for (const auto& [key, c] : x.terms()) terms[CohomClass::render_key(x.spec(), key)] = to_string(c);
    return {{"factors", to_json(x.spec())}, {"terms", terms}};
}

Json to_json(const RationalVector& v)
{
    Json j = Json::array();
    for (const auto& q : v) j.push_back(to_string(q));
    return j;
}

Json to_json(const Bidegree& b) { return Json::array({b.codim, b.index}); }

Json to_json(const Verdict& v)
{
    return {{"target", v.target.to_string()},
            {"bidegree", to_json(v.bidegree)},
            {"verdict", to_string(v.flag)},
            {"coordinates", to_json(v.coordinates)},
            {"residual", v.residual.to_string()}};
}

Json to_json(const DerivationStep& step, std::size_t index)
{
    Json j{{"step", index}, {"kind", to_string(step.kind)}};
    j["parent"] = step.parent ? Json(*step.parent) : Json(nullptr);
    j["generator"] = step.generator ? Json(step.generator->name()) : Json(nullptr);
    j["bidegree"] = to_json(step.bidegree);
    j["element"] = step.element.to_string();
    return j;
}

Json span_summary(const RelationSpan& span, bool with_relations)
{
    Json out = Json::array();
    for (const auto& b : span.bidegrees()) {
        Json entry{{"bidegree", to_json(b)},
                   {"monomials", span.columns(b).size()},
                   {"dimension", span.dimension(b)}};
        if (with_relations) {
            Json rel = Json::array();
            for (const auto& r : span.relations(b)) rel.push_back(r.to_string());
            entry["relations"] = rel;
        }
        out.push_back(entry);
    }
    return out;
}

Json to_json(const PropositionReport& r)
{
    Json identities = Json::array();
    for (const auto& c : r.identities)
        identities.push_back({{"name", c.name}, {"passed", c.passed}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
    Json nonzero = Json::array();
    for (const auto& c : r.nonvanishing) nonzero.push_back({{"name", c.name}, {"passed", c.passed}, {"value", to_json(c.value)}});
    return {{"slot", kunneth(r.config.index(1, 1, 1, 1))},
            {"classes",
             {{"h1", to_json(r.h1)},
              {"h2", to_json(r.h2)},
              {"h3", to_json(r.h3)},
              {"h4", to_json(r.h4)},
              {"h2.h3", to_json(r.h2_cup_h3)},
              {"h3.h4", to_json(r.h3_cup_h4)}}},
            {"identities", identities},
            {"nonvanishing", nonzero},
            {"rank_h1_h2h3", r.rank_h1_h2h3},
            {"passed", r.passed}};
}

Json to_json(const KernelReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.stacked) rows.push_back(to_json(row));
    Json kernel = Json::array();
    for (const auto& v : r.kernel) kernel.push_back(to_json(v));
    Json keys = Json::array();
    const FactorSpec spec = r.config.spec();
    for (const auto& k : r.keys) keys.push_back(CohomClass::render_key(spec, k));
    return {{"columns", {"r (q1^2)", "s (q2)"}},
            {"keys", keys},
            {"stacked_matrix", rows},
            {"kernel_basis", kernel},
            {"w_detected", r.w_detected},
            {"zero_vanishes", r.zero_vanishes},
            {"passed", r.passed},
            {"hypothesis", {{"statement", r.hypothesis}, {"verified", false}}}};
}

}  // namespace tautcalc
