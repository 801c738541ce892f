#pragma once

// Exact scalars: arbitrary precision rationals and polynomials in the
// formal genus symbol g.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tautcalc {

using Rational = mpq_class;

/// Renders a rational as "a" or "a/b" with b > 0 and gcd(a, b) = 1.
std::string to_string(const Rational& q);

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// A polynomial in g with rational coefficients, stored lowest degree first.
/// Zero is the empty polynomial; there are never trailing zeros.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long value);  // NOLINT(google-explicit-constructor)
    Coefficient(const Rational& value);  // NOLINT(google-explicit-constructor)
    Coefficient(std::initializer_list<Rational> coeffs);
    explicit Coefficient(std::vector<Rational> coeffs);

    /// The polynomial g.
    static Coefficient genus();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational operator[](std::size_t i) const;

    /// Constant term; only meaningful when is_constant().
    Rational constant() const;
    Rational evaluate(const Rational& g) const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    Coefficient operator-() const;

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.coeffs_ == b.coeffs_; }
    friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b);

    /// "c0 + c1*g + c2*g^2", zero terms omitted; "0" for zero.
    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace tautcalc
