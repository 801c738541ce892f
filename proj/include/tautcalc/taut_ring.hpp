#pragma once

// The free bigraded commutative algebra over Q[g] on generators p_i (bidegree
// (i, i-1)) and q_i (bidegree (i, i)), i >= 1, together with the sl2 operators
// e (multiplication by p_1), h (weight scaling) and the second order
// differential operator D realizing f.

#include "tautcalc/coefficient.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tautcalc {

enum class GenKind { P, Q };

struct Generator {
    GenKind kind;
    int index;  // >= 1

    int codim() const { return index; }
    int beauville_index() const { return kind == GenKind::P ? index - 1 : index; }
    std::string name() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct Bidegree {
    int codim = 0;
    int index = 0;

    bool valid() const { return codim >= 0 && index >= 0 && index <= codim; }
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// A monomial in the generators; zero exponents are never stored.
class TautMonomial {
public:
    TautMonomial() = default;
    /// Throws std::invalid_argument on index < 1 or negative exponent.
    TautMonomial(std::initializer_list<std::pair<Generator, int>> factors);

    static TautMonomial of(Generator gen, int exponent = 1);

    const std::map<Generator, int>& exponents() const { return exps_; }
    int exponent(Generator gen) const;
    bool is_one() const { return exps_.empty(); }
    bool has_p() const;

    int codim() const;
    int index() const;
    Bidegree bidegree() const { return {codim(), index()}; }
    /// Number of p-factors counted with multiplicity, i.e. codim - index.
    int p_degree() const { return codim() - index(); }

    /// Multiplies by gen^delta; delta may be negative as long as the result stays >= 0.
    TautMonomial times(Generator gen, int delta = 1) const;
    TautMonomial operator*(const TautMonomial& o) const;

    /// "1", "p2^2*q1", generators in canonical order.
    std::string to_string() const;

    /// Graded order: codim first, then lexicographic on (generator, exponent).
    friend std::strong_ordering operator<=>(const TautMonomial& a, const TautMonomial& b);
    friend bool operator==(const TautMonomial& a, const TautMonomial& b) { return a.exps_ == b.exps_; }

private:
    std::map<Generator, int> exps_;
};

/// Finite Q[g]-linear combination of monomials with no zero coefficients.
class TautElement {
public:
    using Terms = std::map<TautMonomial, Coefficient>;

    TautElement() = default;
    TautElement(const Coefficient& scalar);  // NOLINT(google-explicit-constructor)
    TautElement(const TautMonomial& m, const Coefficient& c = Coefficient(1));

    /// Sums the given terms; throws std::invalid_argument for generator index 0.
    static TautElement make(const std::vector<std::pair<TautMonomial, Coefficient>>& terms);
    static TautElement p(int i, int exponent = 1);
    static TautElement q(int i, int exponent = 1);
    /// W = 2 q1^2 - 2 (2g - 2) q2.
    static TautElement w_cycle();

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coefficient coefficient(const TautMonomial& m) const;
    /// True when every coefficient is a rational constant (no g).
    bool is_numeric() const;
    /// Largest codim among the terms; -1 for zero.
    int max_codim() const;
    /// Single bidegree shared by every term, if any.
    bool is_homogeneous() const;

    void add_term(const TautMonomial& m, const Coefficient& c);

    TautElement& operator+=(const TautElement& o);
    TautElement& operator-=(const TautElement& o);
    friend TautElement operator+(TautElement a, const TautElement& b) { return a += b; }
    friend TautElement operator-(TautElement a, const TautElement& b) { return a -= b; }
    friend TautElement operator*(const TautElement& a, const TautElement& b);
    friend TautElement operator*(const Coefficient& c, const TautElement& x);
    TautElement operator-() const;
    TautElement pow(int exponent) const;

    friend bool operator==(const TautElement& a, const TautElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    Terms terms_;
};

TautElement bidegree_component(const TautElement& x, int codim, int index);
/// All (codim, index) pairs occurring in x.
std::vector<Bidegree> bidegrees(const TautElement& x);

TautElement op_e(const TautElement& x);
TautElement op_h(const TautElement& x);
TautElement op_D(const TautElement& x);
TautElement op_D(const TautMonomial& m);

TautElement substitute_genus(const TautElement& x, const Rational& genus);
TautElement truncate_dimension(const TautElement& x, int genus);

long binomial(int n, int k);

}  // namespace tautcalc
