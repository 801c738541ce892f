#include "tautcalc/coefficient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && s[0] == '-') i = 1;
        if (i >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

Coefficient::Coefficient(long value) : coeffs_{Rational(value)} { normalize(); }

Coefficient::Coefficient(const Rational& value) : coeffs_{value} { normalize(); }

Coefficient::Coefficient(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Coefficient::Coefficient(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Coefficient Coefficient::genus() { return Coefficient{Rational(0), Rational(1)}; }

void Coefficient::normalize()
{
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Coefficient::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Coefficient::constant() const { return (*this)[0]; }

Rational Coefficient::evaluate(const Rational& g) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + *it;
    return acc;
}

Coefficient& Coefficient::operator+=(const Coefficient& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Coefficient Coefficient::operator-() const
{
    Coefficient r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b)
{
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Coefficient::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << tautcalc::to_string(mag);
            continue;
        }
        if (mag != 1) os << tautcalc::to_string(mag) << "*";
        os << "g";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace tautcalc
