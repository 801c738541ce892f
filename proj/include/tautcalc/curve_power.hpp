#pragma once

// Tautological classes on C^n (n <= 3) for a generic curve C of genus g:
// diagonal classes of set partitions of {1..n}, each block decorated by the
// unit, the canonical class K, or the base point x0. K and x0 are kept
// independent; only relations forced by dimension are imposed.

#include "tautcalc/coefficient.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tautcalc {

inline constexpr int kMaxCurvePower = 3;

enum class Decoration : std::uint8_t { Unit, K, Point };

inline int degree(Decoration d) { return d == Decoration::Unit ? 0 : 1; }

struct Block {
    std::uint8_t members = 0;  // bit i set <=> factor i + 1 in the block
    Decoration decoration = Decoration::Unit;

    int size() const;
    friend auto operator<=>(const Block&, const Block&) = default;
};

/// Set partition of {1..n} with decorated blocks, in canonical form: blocks
/// sorted by smallest member, and a point decoration only on singletons
/// (x0 placed on a diagonal is the product of x0 on each factor).
class DecoratedPartition {
public:
    DecoratedPartition() = default;
    /// Throws std::invalid_argument unless the blocks partition {1..n}.
    DecoratedPartition(int n, std::vector<Block> blocks);

    /// Discrete partition with unit decorations.
    static DecoratedPartition trivial(int n);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int codim() const;
    /// Index of the block containing factor (1-based).
    std::size_t block_of(int factor) const;

    std::string to_string() const;

    friend auto operator<=>(const DecoratedPartition&, const DecoratedPartition&) = default;

private:
    int n_ = 0;
    std::vector<Block> blocks_;
};

class CurveClass {
public:
    using Terms = std::map<DecoratedPartition, Coefficient>;

    explicit CurveClass(int n = 0);
    CurveClass(const DecoratedPartition& p, const Coefficient& c = Coefficient(1));

    static CurveClass unit(int n);
    /// pr_i^* of a decoration (1-based factor).
    static CurveClass on_factor(int n, int factor, Decoration d);
    /// Diagonal where the listed factors coincide, decorated by d.
    static CurveClass diagonal(int n, std::vector<int> factors, Decoration d = Decoration::Unit);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coefficient coefficient(const DecoratedPartition& p) const;
    void add_term(const DecoratedPartition& p, const Coefficient& c);
    /// Largest codim of a term, -1 for zero.
    int max_codim() const;

    CurveClass& operator+=(const CurveClass& o);
    CurveClass& operator-=(const CurveClass& o);
    friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
    friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
    friend CurveClass operator*(const Coefficient& c, const CurveClass& x);
    friend CurveClass operator*(const CurveClass& x, const CurveClass& y);
    CurveClass operator-() const;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;

    /// e.g. "1/2*[K x C] + (1 - g)*[x0 x C] + 1/2*[K_Delta]"
    std::string to_string() const;

private:
    int n_ = 0;
    Terms terms_;
};

/// Intersection product. Blocks merge by join of partitions; every excess
/// identification on a merged block contributes -K (normal bundle of a
/// diagonal is the tangent bundle); decoration degree >= 2 on a block is zero.
CurveClass product(const CurveClass& x, const CurveClass& y);

/// Pullback along f : C^n -> C^m, f(x)_k = x_{source[k]}; source has length
/// m with 1-based entries in [1, n].
CurveClass pullback(const CurveClass& x, const std::vector<int>& source, int n);

/// Pushforward along the projection forgetting factor `drop` (1-based).
CurveClass pushforward(const CurveClass& x, int drop);

/// Degree of the codim-n part (pushforward to a point).
Coefficient degree(const CurveClass& x);

CurveClass codim_component(const CurveClass& x, int codim);

/// sum_{k <= max_codim} d^k / k!, for d of pure codim 1.
CurveClass exp_truncated(const CurveClass& d, int max_codim);

/// The factors of C^2 swapped.
CurveClass swap_factors(const CurveClass& x);

struct PullbackTraceLine {
    std::string description;
    CurveClass value;
};

struct PhiPullbacks {
    CurveClass xi;      // iota^* theta on C
    CurveClass ell;     // (iota, phi)^* c1(P) on C x (C x C)
    CurveClass q0, q1, q2, q1_squared, w;
    CurveClass z;       // K x K - (2g - 2) K_Delta
    std::vector<PullbackTraceLine> trace;  // successive rewrites of phi^* F(theta . [C])
    bool trace_consistent = false;
    bool verdict = false;  // phi^* W == Z
};

/// Replays phi^* F(theta . [C]) = pr_{2,*}(pr_1^* xi . exp(ell)) in formal g.
PhiPullbacks phi_pullbacks();

/// Z = K x K - (2g - 2) K_Delta on C^2.
CurveClass z_cycle();

}  // namespace tautcalc
