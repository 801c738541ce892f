#include "tautcalc/taut_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

std::string Generator::name() const { return (kind == GenKind::P ? "p" : "q") + std::to_string(index); }

TautMonomial::TautMonomial(std::initializer_list<std::pair<Generator, int>> factors)
{
    for (const auto& [gen, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent on " + gen.name());
        *this = times(gen, e);
    }
}

TautMonomial TautMonomial::of(Generator gen, int exponent) { return TautMonomial{{gen, exponent}}; }

int TautMonomial::exponent(Generator gen) const
{
    auto it = exps_.find(gen);
    return it == exps_.end() ? 0 : it->second;
}

bool TautMonomial::has_p() const { return !exps_.empty() && exps_.begin()->first.kind == GenKind::P; }

int TautMonomial::codim() const
{
    int c = 0;
    for (const auto& [gen, e] : exps_) c += gen.codim() * e;
    return c;
}

int TautMonomial::index() const
{
    int c = 0;
    for (const auto& [gen, e] : exps_) c += gen.beauville_index() * e;
    return c;
}

TautMonomial TautMonomial::times(Generator gen, int delta) const
{
    if (gen.index < 1) {
        throw std::invalid_argument(gen.kind == GenKind::Q ? "q0 is not a generator (it is the scalar g)"
                                                           : "p0 is not a generator");
    }
    TautMonomial r = *this;
    if (delta == 0) return r;
    int e = r.exponent(gen) + delta;
    if (e < 0) throw std::invalid_argument("negative exponent on " + gen.name());
    if (e == 0)
        r.exps_.erase(gen);
    else
        r.exps_[gen] = e;
    return r;
}

TautMonomial TautMonomial::operator*(const TautMonomial& o) const
{
    TautMonomial r = *this;
    for (const auto& [gen, e] : o.exps_) r.exps_[gen] += e;
    return r;
}

std::string TautMonomial::to_string() const
{
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [gen, e] : exps_) {
        if (!s.empty()) s += "*";
        s += gen.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::strong_ordering operator<=>(const TautMonomial& a, const TautMonomial& b)
{
    if (auto c = a.codim() <=> b.codim(); c != 0) return c;
    auto ia = a.exps_.begin();
    auto ib = b.exps_.begin();
    for (; ia != a.exps_.end() && ib != b.exps_.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) return c;
        if (auto c = ia->second <=> ib->second; c != 0) return c;
    }
    if (ia == a.exps_.end() && ib == b.exps_.end()) return std::strong_ordering::equal;
    return ia == a.exps_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

TautElement::TautElement(const Coefficient& scalar) { add_term(TautMonomial{}, scalar); }

TautElement::TautElement(const TautMonomial& m, const Coefficient& c) { add_term(m, c); }

TautElement TautElement::make(const std::vector<std::pair<TautMonomial, Coefficient>>& terms)
{
    TautElement x;
    for (const auto& [m, c] : terms) x.add_term(m, c);
    return x;
}

TautElement TautElement::p(int i, int exponent) { return TautElement(TautMonomial::of({GenKind::P, i}, exponent)); }

TautElement TautElement::q(int i, int exponent) { return TautElement(TautMonomial::of({GenKind::Q, i}, exponent)); }

TautElement TautElement::w_cycle()
{
    // 2 (q1^2 - (2g - 2) q2)
    Coefficient two_g_minus_two{Rational(-2), Rational(2)};
    return Coefficient(2) * (q(1, 2) - two_g_minus_two * q(2));
}

Coefficient TautElement::coefficient(const TautMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient() : it->second;
}

bool TautElement::is_numeric() const
{
    for (const auto& [m, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

int TautElement::max_codim() const
{
    int c = -1;
    for (const auto& [m, coeff] : terms_) c = std::max(c, m.codim());
    return c;
}

bool TautElement::is_homogeneous() const { return bidegrees(*this).size() <= 1; }

void TautElement::add_term(const TautMonomial& m, const Coefficient& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TautElement& TautElement::operator+=(const TautElement& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TautElement& TautElement::operator-=(const TautElement& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TautElement operator*(const TautElement& a, const TautElement& b)
{
    TautElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

TautElement operator*(const Coefficient& c, const TautElement& x)
{
    TautElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, cm] : x.terms_) r.add_term(m, c * cm);
    return r;
}

TautElement TautElement::operator-() const { return Coefficient(-1) * *this; }

TautElement TautElement::pow(int exponent) const
{
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    TautElement r(Coefficient(1));
    for (int k = 0; k < exponent; ++k) r = r * *this;
    return r;
}

std::string TautElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::size_t nonzero = 0;
        for (const auto& v : c.coefficients()) nonzero += v != 0;
        if (nonzero > 1) {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")";
            if (!m.is_one()) os << "*" << m.to_string();
            first = false;
            continue;
        }
        // single term coefficient r * g^k
        int k = c.degree();
        Rational r = c[static_cast<std::size_t>(k)];
        if (first)
            os << (r < 0 ? "-" : "");
        else
            os << (r < 0 ? " - " : " + ");
        first = false;
        Rational mag = abs(r);
        std::string scalar;
        if (k == 0) {
            scalar = tautcalc::to_string(mag);
        } else {
            scalar = mag == 1 ? "" : tautcalc::to_string(mag) + "*";
            scalar += "g";
            if (k > 1) scalar += "^" + std::to_string(k);
        }
        if (m.is_one()) {
            os << scalar;
        } else if (scalar == "1") {
            os << m.to_string();
        } else {
            os << scalar << "*" << m.to_string();
        }
    }
    return os.str();
}

TautElement bidegree_component(const TautElement& x, int codim, int index)
{
    TautElement r;
    for (const auto& [m, c] : x.terms())
        if (m.codim() == codim && m.index() == index) r.add_term(m, c);
    return r;
}

std::vector<Bidegree> bidegrees(const TautElement& x)
{
    std::vector<Bidegree> out;
    for (const auto& [m, c] : x.terms()) {
        Bidegree b = m.bidegree();
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TautElement op_e(const TautElement& x) { return TautElement::p(1) * x; }

TautElement op_h(const TautElement& x)
{
    TautElement r;
    for (const auto& [m, c] : x.terms()) {
        // 2i - j - g
        Coefficient weight{Rational(2 * m.codim() - m.index()), Rational(-1)};
        r.add_term(m, weight * c);
    }
    return r;
}

long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

TautElement op_D(const TautMonomial& m)
{
    TautElement r;
    std::vector<std::pair<int, int>> ps;  // (index, exponent)
    std::vector<std::pair<int, int>> qs;
    for (const auto& [gen, e] : m.exponents()) (gen.kind == GenKind::P ? ps : qs).emplace_back(gen.index, e);

    // -1/2 sum_{i,j} C(i+j, j) p_{i+j-1} d_{p_i} d_{p_j}
    for (auto [i, ei] : ps) {
        for (auto [j, ej] : ps) {
            long mult = i == j ? static_cast<long>(ei) * (ei - 1) : static_cast<long>(ei) * ej;
            if (mult == 0) continue;
            TautMonomial rest = m.times({GenKind::P, i}, -1).times({GenKind::P, j}, -1).times({GenKind::P, i + j - 1});
            r.add_term(rest, Coefficient(Rational(-binomial(i + j, j) * mult, 2)));
        }
    }
    // -sum_{i,j} C(i+j-1, j) q_{i+j-1} d_{q_i} d_{p_j}
    for (auto [i, ei] : qs) {
        for (auto [j, ej] : ps) {
            TautMonomial rest = m.times({GenKind::Q, i}, -1).times({GenKind::P, j}, -1).times({GenKind::Q, i + j - 1});
            r.add_term(rest, Coefficient(-binomial(i + j - 1, j) * ei * ej));
        }
    }
    // sum_i q_{i-1} d_{p_i}, with q_0 = g
    for (auto [i, ei] : ps) {
        TautMonomial rest = m.times({GenKind::P, i}, -1);
        if (i == 1)
            r.add_term(rest, Coefficient{Rational(0), Rational(ei)});
        else
            r.add_term(rest.times({GenKind::Q, i - 1}), Coefficient(ei));
    }
    return r;
}

TautElement op_D(const TautElement& x)
{
    TautElement r;
    for (const auto& [m, c] : x.terms()) r += c * op_D(m);
    return r;
}

TautElement substitute_genus(const TautElement& x, const Rational& genus)
{
    TautElement r;
    for (const auto& [m, c] : x.terms()) r.add_term(m, Coefficient(c.evaluate(genus)));
    return r;
}

TautElement truncate_dimension(const TautElement& x, int genus)
{
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    TautElement r;
    for (const auto& [m, c] : x.terms())
        if (m.codim() <= genus) r.add_term(m, c);
    return r;
}

}  // namespace tautcalc
