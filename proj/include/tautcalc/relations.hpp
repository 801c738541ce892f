#pragma once

// Tautological relations derived from dimension vanishing (CH^i(J) = 0 for
// i > g), closed under D and under multiplication by generators, for a fixed
// numeric genus and a codim bound N.

#include "tautcalc/linear_algebra.hpp"
#include "tautcalc/taut_ring.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautcalc {

/// Complete, duplicate-free list of monomials of bidegree b in canonical order.
std::vector<TautMonomial> enumerate_monomials(Bidegree b);

/// All monomials m with genus < codim(m) <= bound, in canonical order.
std::vector<TautMonomial> dimension_seeds(int genus, int bound);

/// One accepted step of the closure. `element` is the raw derived relation
/// (not reduced), so every step can be replayed from its parent.
struct DerivationStep {
    enum class Kind { Seed, Differential, Multiply };
    Kind kind = Kind::Seed;
    std::optional<std::size_t> parent;
    std::optional<Generator> generator;
    Bidegree bidegree;
    TautElement element;
};

std::string to_string(DerivationStep::Kind kind);

class RelationSpan {
public:
    /// Builds the least fixed point; requires bound >= genus >= 1.
    RelationSpan(int genus, int bound);

    int genus() const { return genus_; }
    int bound() const { return bound_; }

    bool in_bound(Bidegree b) const { return b.valid() && b.codim <= bound_; }
    /// All bidegrees within bound, ascending.
    std::vector<Bidegree> bidegrees() const;
    const std::vector<TautMonomial>& columns(Bidegree b) const;
    const RowReducedBasis& rows(Bidegree b) const;
    std::size_t dimension(Bidegree b) const { return rows(b).rank(); }
    std::vector<TautElement> relations(Bidegree b) const;

    RationalVector to_vector(const TautElement& x, Bidegree b) const;
    TautElement to_element(const RationalVector& v, Bidegree b) const;

    const std::vector<DerivationStep>& derivation() const { return log_; }
    /// Indices of the steps needed to derive step `index`, ascending, including it.
    std::vector<std::size_t> ancestry(std::size_t index) const;
    /// Indices of accepted steps that landed in bidegree b.
    std::vector<std::size_t> steps_in(Bidegree b) const;

    /// Runs the closure to a fixed point again; returns the number of rows added.
    std::size_t saturate();
    /// Replays every derivation step and checks that the stored rows span
    /// exactly the replayed relations. Returns an empty string on success.
    std::string replay_check() const;

private:
    struct Slot {
        std::vector<TautMonomial> columns;
        std::map<TautMonomial, std::size_t> column_of;
        RowReducedBasis basis;
    };

    Slot& slot(Bidegree b);
    const Slot& slot(Bidegree b) const;
    bool offer(DerivationStep step);
    std::size_t run_queue();

    int genus_;
    int bound_;
    std::map<Bidegree, Slot> slots_;
    std::vector<DerivationStep> log_;
    std::size_t processed_ = 0;
};

enum class VerdictFlag { DerivedZero, NotDerived };

std::string to_string(VerdictFlag flag);

struct Verdict {
    TautElement target;
    Bidegree bidegree;
    VerdictFlag flag = VerdictFlag::NotDerived;
    /// target = sum_k coordinates[k] * span.relations(bidegree)[k] + residual
    RationalVector coordinates;
    TautElement residual;
};

class BoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Decides whether x reduces to zero against the derived relations.
/// x must be homogeneous with numeric coefficients; a bidegree beyond the
/// span's bound throws BoundError.
Verdict membership(const TautElement& x, const RelationSpan& span);

/// membership(W at g = genus, RelationSpan(genus, bound)).
Verdict check_w(int genus, int bound);
Verdict check_w(const RelationSpan& span);

/// Default codim bound for a genus.
inline int default_bound(int genus) { return genus + 4; }

}  // namespace tautcalc
