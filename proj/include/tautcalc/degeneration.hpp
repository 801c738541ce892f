#pragma once

// Cycle classes of two families of compact type test curves over
// C1 x C2, their relative q-classes, and the checks that separate q1^2 from
// q2 in the [1,1,1,1] Kunneth slot.
//
// Factors are ordered J1, C1, J2, C2, followed by an optional constant
// Jacobian J0 when a constant curve C0 is attached (genus > 4).

#include "tautcalc/cohomology.hpp"

#include <string>
#include <vector>

namespace tautcalc {

struct FamilyConfig {
    int genus1 = 2;      // genus of C1
    int genus2 = 2;      // genus of C2
    int extra_genus = 0; // genus of the constant curve C0, 0 when absent

    int total_genus() const { return genus1 + genus2 + extra_genus; }
    /// Split used for total genus g >= 4: 2 + 2 + (g - 4).
    static FamilyConfig for_genus(int genus);

    FactorSpec spec() const;
    std::vector<std::size_t> abelian_factors() const;
    std::vector<std::size_t> curve_factors() const;
    /// Kunneth index on J1, C1, J2, C2 padded with zeros for J0.
    KunnethIndex index(int a1, int b1, int a2, int b2) const;
};

/// [C] = theta^(h-1) / (h-1)! on Abelian(h).
CohomClass curve_class_in_jacobian(int h);

/// Class of {(z - x, x)} in J x C: the group law pulled back along
/// (u, x) -> u + AJ(x) applied to [C].
CohomClass translated_curve_class(int h);

/// Class of the Abel-Jacobi graph {(AJ(y), y)} in J x C, solved from the
/// Poincare pairing int [graph] . u = int_C (AJ, id)^* u.
CohomClass aj_graph_class(int h);

struct TestFamilyClasses {
    FamilyConfig config;
    CohomClass psi1, psi2, psi1_primed, psi2_primed, constant_part;
    CohomClass curve;         // cl[C-bar]  = psi1 + psi2 (+ constant part)
    CohomClass curve_primed;  // cl[C-bar'] = psi1' + psi2' (+ constant part)
};

TestFamilyClasses test_family_classes(const FamilyConfig& config);

/// Part of a class of total degree i on the base curves C1, C2.
CohomClass base_degree_component(const CohomClass& x, const FamilyConfig& config, int i);

/// q-bar_i = F(theta . [C-bar]_(i)), fiberwise over the Jacobian factors.
CohomClass q_bar(const TestFamilyClasses& families, int i, bool primed);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    CohomClass lhs, rhs;
};

struct NonvanishingCheck {
    std::string name;
    bool passed = false;
    CohomClass value;
};

struct PropositionReport {
    FamilyConfig config;
    CohomClass h1, h2, h3, h4;
    CohomClass h2_cup_h3, h3_cup_h4;
    std::vector<IdentityCheck> identities;
    std::vector<NonvanishingCheck> nonvanishing;
    /// Rank of {h1, h2 . h3}: 1 means proportional in this normalization.
    std::size_t rank_h1_h2h3 = 0;
    bool passed = false;
};

PropositionReport prop_calcul_check(const FamilyConfig& config);

struct KernelReport {
    FamilyConfig config;
    /// Rows: coordinates of the [1,1,1,1] slot of each family against (r, s).
    RationalMatrix stacked;
    std::vector<TensorKey> keys;
    RationalMatrix kernel;  // basis of the joint kernel in (r, s)
    bool w_detected = false;  // (r, s) = (1, -(2g - 2)) leaves a nonzero class
    bool zero_vanishes = false;
    bool passed = false;
    std::string hypothesis;  // unverified arithmetic input
};

KernelReport kernel_test(const FamilyConfig& config);

}  // namespace tautcalc
