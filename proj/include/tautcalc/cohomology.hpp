#pragma once

// Rational cohomology of products of curves and abelian varieties, as a
// graded-commutative Kunneth algebra with Koszul signs.
//
// Curve(h):    basis 1, a_1..a_h, b_1..b_h, pt  (degrees 0, 1, 1, 2) with
//              a_i b_j = delta_ij pt = -b_j a_i and int_C pt = 1.
// Abelian(h):  exterior algebra on al_1, be_1, ..., al_h, be_h (degree 1),
//              with int al_1 be_1 ... al_h be_h = 1 and theta = sum al_i be_i.

#include "tautcalc/coefficient.hpp"
#include "tautcalc/linear_algebra.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tautcalc {

enum class FactorKind { Curve, Abelian };

struct Factor {
    FactorKind kind = FactorKind::Curve;
    int genus = 0;  // genus of the curve, or dimension of the abelian variety
    std::string label;

    static Factor curve(int genus, std::string label = "C");
    static Factor abelian(int dim, std::string label = "J");

    std::uint32_t basis_size() const;
    int real_dimension() const { return kind == FactorKind::Curve ? 2 : 2 * genus; }
    /// Local basis index of the top class.
    std::uint32_t top() const;
    int degree(std::uint32_t local) const;
    /// Local index of a_i / al_i (i is 1-based).
    std::uint32_t alpha(int i) const;
    /// Local index of b_i / be_i.
    std::uint32_t beta(int i) const;
    std::string render(std::uint32_t local) const;

    friend bool operator==(const Factor& a, const Factor& b) { return a.kind == b.kind && a.genus == b.genus; }
};

using FactorSpec = std::vector<Factor>;
/// One local basis index per factor.
using TensorKey = std::vector<std::uint32_t>;
using KunnethIndex = std::vector<int>;

bool same_shape(const FactorSpec& a, const FactorSpec& b);

class CohomClass {
public:
    using Terms = std::map<TensorKey, Rational>;

    CohomClass() = default;
    explicit CohomClass(FactorSpec spec);

    static CohomClass unit(const FactorSpec& spec);
    static CohomClass basis(const FactorSpec& spec, const TensorKey& key, const Rational& c = 1);
    /// Pullback of a class on one factor: 1 (x) ... (x) local (x) ... (x) 1.
    static CohomClass on_factor(const FactorSpec& spec, std::size_t factor, std::uint32_t local, const Rational& c = 1);
    /// theta on an abelian factor, sum_i al_i be_i.
    static CohomClass theta(const FactorSpec& spec, std::size_t factor);
    /// Sum of theta over every abelian factor.
    static CohomClass total_theta(const FactorSpec& spec);

    const FactorSpec& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const TensorKey& key) const;
    void add_term(const TensorKey& key, const Rational& c);
    int total_degree(const TensorKey& key) const;
    KunnethIndex kunneth_index(const TensorKey& key) const;

    CohomClass& operator+=(const CohomClass& o);
    CohomClass& operator-=(const CohomClass& o);
    friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
    friend CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }
    friend CohomClass operator*(const Rational& c, const CohomClass& x);
    CohomClass operator-() const;
    CohomClass pow(int exponent) const;

    friend bool operator==(const CohomClass& a, const CohomClass& b);

    /// "a1*b1 | 1 | al1*be2 | pt" per term.
    static std::string render_key(const FactorSpec& spec, const TensorKey& key);
    std::string to_string() const;

private:
    FactorSpec spec_;
    Terms terms_;
};

/// Graded-commutative product with Koszul signs; throws on mismatched specs.
CohomClass cup(const CohomClass& x, const CohomClass& y);
inline CohomClass operator*(const CohomClass& x, const CohomClass& y) { return cup(x, y); }

/// x (x) y on the concatenated spec.
CohomClass tensor(const CohomClass& x, const CohomClass& y);

/// Reorders factors: factor k of the result is factor order[k] of x.
CohomClass permute(const CohomClass& x, const std::vector<std::size_t>& order);

/// Pushforward to a point along one factor.
CohomClass integrate(const CohomClass& x, std::size_t factor);
/// Integral over every factor.
Rational integrate_all(const CohomClass& x);

CohomClass kunneth_component(const CohomClass& x, const KunnethIndex& index);
/// Part of total degree `degree` on the listed factors.
CohomClass partial_degree_component(const CohomClass& x, const std::set<std::size_t>& factors, int degree);
/// All Kunneth indices occurring in x.
std::vector<KunnethIndex> kunneth_support(const CohomClass& x);

/// A graded algebra homomorphism out of H*(spec), fixed by the images of the
/// degree-1 generators of each factor and of pt on curve factors.
struct GeneratorImages {
    FactorSpec target;
    /// images[factor][local index of a degree-1 generator or pt]
    std::vector<std::map<std::uint32_t, CohomClass>> images;
};
CohomClass apply_homomorphism(const CohomClass& x, const GeneratorImages& hom);

/// Pullback along the group law of an abelian factor: the factor is replaced
/// by two copies of itself (positions factor, factor + 1).
CohomClass coproduct(const CohomClass& x, std::size_t factor);

/// Pullback along [-1] on an abelian factor.
CohomClass negation(const CohomClass& x, std::size_t factor);

/// Pullback along the Abel-Jacobi embedding C -> J: replaces the abelian
/// factor by a curve of the same genus, al_i -> a_i, be_i -> b_i.
CohomClass aj_transfer(const CohomClass& x, std::size_t factor);

/// Fourier transform on the listed abelian factors (relative to the others):
/// pr_{2,*}(pr_1^* x . exp(c1 P)), c1 P = sum_i (al_i (x) be^_i - be_i (x) al^_i).
CohomClass fourier(const CohomClass& x, const std::set<std::size_t>& fiber);

/// All basis keys of a spec, in lexicographic order.
std::vector<TensorKey> all_keys(const FactorSpec& spec);

/// Matrix of <e_k, e_l> = int e_k . e_l over the full basis of the spec.
RationalMatrix poincare_pairing(const FactorSpec& spec);

/// The class c with int c . e = functional(e) for every basis element e.
CohomClass poincare_dual(const FactorSpec& spec, const std::vector<Rational>& functional);

/// Coordinates of x against a list of keys.
RationalVector coordinates(const CohomClass& x, const std::vector<TensorKey>& keys);

}  // namespace tautcalc
