#pragma once

// JSON forms of the engine objects. Rationals are "a/b" strings and
// g-polynomials are lists of rationals, lowest degree first.

#include "tautcalc/cohomology.hpp"
#include "tautcalc/curve_power.hpp"
#include "tautcalc/degeneration.hpp"
#include "tautcalc/relations.hpp"
#include "tautcalc/taut_ring.hpp"

#include <json.hpp>

namespace tautcalc {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Coefficient& c);
Json to_json(const TautElement& x);
Json to_json(const CurveClass& x);
Json to_json(const CohomClass& x);
Json to_json(const RationalVector& v);
Json to_json(const Bidegree& b);
Json to_json(const Verdict& v);
Json to_json(const DerivationStep& step, std::size_t index);
Json to_json(const FactorSpec& spec);

/// Per-bidegree dimensions and relations of a span.
Json span_summary(const RelationSpan& span, bool with_relations);

Json to_json(const PropositionReport& r);
Json to_json(const KernelReport& r);

}  // namespace tautcalc
