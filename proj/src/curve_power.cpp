#include "tautcalc/curve_power.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

namespace {

int lowest(std::uint8_t mask) { return std::countr_zero(static_cast<unsigned>(mask)); }

std::vector<Block> canonical_blocks(std::vector<Block> blocks)
{
    std::vector<Block> out;
    for (const auto& b : blocks) {
        if (b.decoration == Decoration::Point && b.size() > 1) {
            for (int i = 0; i < 8; ++i)
                if (b.members & (1u << i)) out.push_back({static_cast<std::uint8_t>(1u << i), Decoration::Point});
        } else {
            out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return lowest(a.members) < lowest(b.members); });
    return out;
}

Coefficient two_g_minus_two() { return Coefficient{Rational(-2), Rational(2)}; }

std::string decoration_name(Decoration d)
{
    switch (d) {
    case Decoration::Unit: return "C";
    case Decoration::K: return "K";
    case Decoration::Point: return "x0";
    }
    return "?";
}

}  // namespace

int Block::size() const { return std::popcount(static_cast<unsigned>(members)); }

DecoratedPartition::DecoratedPartition(int n, std::vector<Block> blocks) : n_(n)
{
    if (n < 0 || n > kMaxCurvePower) throw std::invalid_argument("curve power must be in [0, 3]");
    unsigned seen = 0;
    for (const auto& b : blocks) {
        if (b.members == 0 || (seen & b.members) != 0 || (b.members >> n) != 0)
            throw std::invalid_argument("blocks do not partition {1..n}");
        seen |= b.members;
    }
    if (seen != (1u << n) - 1) throw std::invalid_argument("blocks do not cover {1..n}");
    blocks_ = canonical_blocks(std::move(blocks));
}

DecoratedPartition DecoratedPartition::trivial(int n)
{
    std::vector<Block> blocks;
    for (int i = 0; i < n; ++i) blocks.push_back({static_cast<std::uint8_t>(1u << i), Decoration::Unit});
    return {n, blocks};
}

int DecoratedPartition::codim() const
{
    int c = 0;
    for (const auto& b : blocks_) c += b.size() - 1 + degree(b.decoration);
    return c;
}

std::size_t DecoratedPartition::block_of(int factor) const
{
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        if (blocks_[k].members & (1u << (factor - 1))) return k;
    throw std::out_of_range("factor outside the partition");
}

std::string DecoratedPartition::to_string() const
{
    if (n_ == 0) return "pt";
    // C^2 with one diagonal block reads as the diagonal itself
    if (blocks_.size() == 1 && n_ == 2) {
        return blocks_[0].decoration == Decoration::K ? "K_Delta" : "Delta";
    }
    std::string s;
    for (int f = 1; f <= n_; ++f) {
        const Block& b = blocks_[block_of(f)];
        if (b.size() > 1 && lowest(b.members) != f - 1) continue;
        if (!s.empty()) s += " x ";
        if (b.size() == 1) {
            s += decoration_name(b.decoration);
            continue;
        }
        std::string idx;
        for (int i = 0; i < n_; ++i)
            if (b.members & (1u << i)) idx += std::to_string(i + 1);
        s += (b.decoration == Decoration::K ? "K_Delta" : "Delta") + std::string("_{") + idx + "}";
    }
    return s;
}

CurveClass::CurveClass(int n) : n_(n)
{
    if (n < 0 || n > kMaxCurvePower) throw std::invalid_argument("curve power must be in [0, 3]");
}

CurveClass::CurveClass(const DecoratedPartition& p, const Coefficient& c) : n_(p.n()) { add_term(p, c); }

CurveClass CurveClass::unit(int n) { return CurveClass(DecoratedPartition::trivial(n)); }

CurveClass CurveClass::on_factor(int n, int factor, Decoration d)
{
    if (factor < 1 || factor > n) throw std::invalid_argument("factor out of range");
    auto blocks = DecoratedPartition::trivial(n).blocks();
    blocks[static_cast<std::size_t>(factor - 1)].decoration = d;
    return CurveClass(DecoratedPartition(n, blocks));
}

CurveClass CurveClass::diagonal(int n, std::vector<int> factors, Decoration d)
{
    std::uint8_t merged = 0;
    for (int f : factors) {
        if (f < 1 || f > n) throw std::invalid_argument("factor out of range");
        merged |= static_cast<std::uint8_t>(1u << (f - 1));
    }
    std::vector<Block> blocks{{merged, d}};
    for (int i = 0; i < n; ++i)
        if (!(merged & (1u << i))) blocks.push_back({static_cast<std::uint8_t>(1u << i), Decoration::Unit});
    return CurveClass(DecoratedPartition(n, blocks));
}

Coefficient CurveClass::coefficient(const DecoratedPartition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Coefficient() : it->second;
}

void CurveClass::add_term(const DecoratedPartition& p, const Coefficient& c)
{
    if (p.n() != n_) throw std::invalid_argument("mismatched curve power");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int CurveClass::max_codim() const
{
    int c = -1;
    for (const auto& [p, coeff] : terms_) c = std::max(c, p.codim());
    return c;
}

CurveClass& CurveClass::operator+=(const CurveClass& o)
{
    if (o.n_ != n_) throw std::invalid_argument("mismatched curve power");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& o)
{
    if (o.n_ != n_) throw std::invalid_argument("mismatched curve power");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

CurveClass operator*(const Coefficient& c, const CurveClass& x)
{
    CurveClass r(x.n_);
    for (const auto& [p, cp] : x.terms_) r.add_term(p, c * cp);
    return r;
}

CurveClass operator*(const CurveClass& x, const CurveClass& y) { return product(x, y); }

CurveClass CurveClass::operator-() const { return Coefficient(-1) * *this; }

std::string CurveClass::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (c.coefficients().size() == 1) {
            Rational r = c.constant();
            if (first)
                os << (r < 0 ? "-" : "");
            else
                os << (r < 0 ? " - " : " + ");
            if (abs(r) != 1) os << tautcalc::to_string(Rational(abs(r))) << "*";
        } else {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")*";
        }
        first = false;
        os << "[" << p.to_string() << "]";
    }
    return os.str();
}

namespace {

// Product of two decorated partitions; returns the zero coefficient when the
// term vanishes.
std::pair<DecoratedPartition, Coefficient> multiply_terms(const DecoratedPartition& a, const DecoratedPartition& b)
{
    const int n = a.n();
    // join of the two partitions
    std::vector<std::uint8_t> joined;
    for (const auto* part : {&a, &b}) {
        for (const auto& blk : part->blocks()) {
            std::uint8_t m = blk.members;
            std::vector<std::uint8_t> keep;
            for (auto j : joined) {
                if (j & m)
                    m |= j;
                else
                    keep.push_back(j);
            }
            keep.push_back(m);
            joined = std::move(keep);
        }
    }
    Coefficient coeff(1);
    std::vector<Block> blocks;
    for (auto mask : joined) {
        int parts = 0;
        int deco_degree = 0;
        Decoration deco = Decoration::Unit;
        for (const auto* part : {&a, &b}) {
            for (const auto& blk : part->blocks()) {
                if ((blk.members & mask) == 0) continue;
                ++parts;
                deco_degree += degree(blk.decoration);
                if (blk.decoration != Decoration::Unit) deco = blk.decoration;
            }
        }
        // excess rank: |B| - (#a-blocks) - (#b-blocks) + 1
        const int excess = std::popcount(static_cast<unsigned>(mask)) - parts + 1;
        if (deco_degree + excess > 1) return {DecoratedPartition::trivial(n), Coefficient()};
        if (excess == 1) {
            deco = Decoration::K;
            coeff = -coeff;
        }
        blocks.push_back({mask, deco});
    }
    return {DecoratedPartition(n, blocks), coeff};
}

}  // namespace

CurveClass product(const CurveClass& x, const CurveClass& y)
{
    if (x.n() != y.n()) throw std::invalid_argument("mismatched curve power");
    CurveClass r(x.n());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            auto [p, c] = multiply_terms(a, b);
            if (!c.is_zero()) r.add_term(p, c * ca * cb);
        }
    return r;
}

CurveClass pullback(const CurveClass& x, const std::vector<int>& source, int n)
{
    const int m = x.n();
    if (static_cast<int>(source.size()) != m) throw std::invalid_argument("map must list a source factor per target factor");
    for (int s : source)
        if (s < 1 || s > n) throw std::invalid_argument("source factor out of range");

    // restrict to the diagonal where target factors share a source factor
    std::vector<Block> fibers;
    for (int k = 0; k < m; ++k) {
        bool placed = false;
        for (auto& f : fibers) {
            if (source[static_cast<std::size_t>(lowest(f.members))] == source[static_cast<std::size_t>(k)]) {
                f.members |= static_cast<std::uint8_t>(1u << k);
                placed = true;
            }
        }
        if (!placed) fibers.push_back({static_cast<std::uint8_t>(1u << k), Decoration::Unit});
    }
    const CurveClass restricted = product(x, CurveClass(DecoratedPartition(m, fibers)));

    CurveClass r(n);
    for (const auto& [p, c] : restricted.terms()) {
        std::vector<Block> blocks;
        std::uint8_t used = 0;
        for (const auto& blk : p.blocks()) {
            std::uint8_t image = 0;
            for (int k = 0; k < m; ++k)
                if (blk.members & (1u << k)) image |= static_cast<std::uint8_t>(1u << (source[static_cast<std::size_t>(k)] - 1));
            used |= image;
            blocks.push_back({image, blk.decoration});
        }
        for (int i = 0; i < n; ++i)
            if (!(used & (1u << i))) blocks.push_back({static_cast<std::uint8_t>(1u << i), Decoration::Unit});
        r.add_term(DecoratedPartition(n, blocks), c);
    }
    return r;
}

CurveClass pushforward(const CurveClass& x, int drop)
{
    const int n = x.n();
    if (drop < 1 || drop > n) throw std::invalid_argument("factor out of range");
    const unsigned bit = 1u << (drop - 1);
    auto squeeze = [&](std::uint8_t mask) {
        unsigned low = mask & (bit - 1);
        unsigned high = (mask >> drop) << (drop - 1);
        return static_cast<std::uint8_t>(low | high);
    };
    CurveClass r(n - 1);
    for (const auto& [p, c] : x.terms()) {
        std::vector<Block> blocks;
        Coefficient factor(1);
        for (const auto& blk : p.blocks()) {
            if (blk.members == bit) {
                // integrate the decoration over the dropped curve
                switch (blk.decoration) {
                case Decoration::Unit: factor = Coefficient(); break;
                case Decoration::K: factor *= two_g_minus_two(); break;
                case Decoration::Point: break;
                }
                continue;
            }
            blocks.push_back({squeeze(static_cast<std::uint8_t>(blk.members & ~bit)), blk.decoration});
        }
        if (!factor.is_zero()) r.add_term(DecoratedPartition(n - 1, blocks), factor * c);
    }
    return r;
}

Coefficient degree(const CurveClass& x)
{
    CurveClass y = codim_component(x, x.n());
    for (int k = x.n(); k >= 1; --k) y = pushforward(y, k);
    return y.coefficient(DecoratedPartition::trivial(0));
}

CurveClass codim_component(const CurveClass& x, int codim)
{
    CurveClass r(x.n());
    for (const auto& [p, c] : x.terms())
        if (p.codim() == codim) r.add_term(p, c);
    return r;
}

CurveClass exp_truncated(const CurveClass& d, int max_codim)
{
    if (codim_component(d, 1) != d)
        throw std::invalid_argument("exponential needs a class of pure codim 1");
    CurveClass sum = CurveClass::unit(d.n());
    CurveClass power = CurveClass::unit(d.n());
    for (int k = 1; k <= max_codim; ++k) {
        power = Coefficient(Rational(1, k)) * product(power, d);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum;
}

CurveClass swap_factors(const CurveClass& x)
{
    if (x.n() != 2) throw std::invalid_argument("swap needs C x C");
    return pullback(x, {2, 1}, 2);
}

CurveClass z_cycle()
{
    CurveClass kk = product(CurveClass::on_factor(2, 1, Decoration::K), CurveClass::on_factor(2, 2, Decoration::K));
    return kk - two_g_minus_two() * CurveClass::diagonal(2, {1, 2}, Decoration::K);
}

PhiPullbacks phi_pullbacks()
{
    PhiPullbacks out;
    const Rational half(1, 2);
    out.xi = Coefficient(half) * CurveClass::on_factor(1, 1, Decoration::K) + CurveClass::on_factor(1, 1, Decoration::Point);

    // on C x (C x C): factor 1 is the source curve, factors 2, 3 the pair (x, y)
    const CurveClass delta1 = CurveClass::diagonal(3, {1, 2});
    const CurveClass delta2 = CurveClass::diagonal(3, {1, 3});
    const CurveClass x0_first = CurveClass::on_factor(3, 1, Decoration::Point);
    const CurveClass x0_pair = CurveClass::on_factor(2, 1, Decoration::Point) + CurveClass::on_factor(2, 2, Decoration::Point);
    const CurveClass pr1_xi = pullback(out.xi, {1}, 3);
    const CurveClass pr2_x0_pair = pullback(x0_pair, {2, 3}, 3);
    out.ell = delta1 + delta2 - Coefficient(2) * x0_first - pr2_x0_pair;

    // successive rewrites of pr_{2,*}(pr_1^* xi . exp(ell))
    const CurveClass direct = pushforward(product(pr1_xi, exp_truncated(out.ell, 3)), 1);
    const CurveClass base_exp = exp_truncated(-x0_pair, 2);
    const CurveClass split = product(
        pushforward(product(pr1_xi, exp_truncated(delta1 + delta2 - Coefficient(2) * x0_first, 3)), 1), base_exp);
    const CurveClass xi_twisted = product(out.xi, exp_truncated(Coefficient(-2) * CurveClass::on_factor(1, 1, Decoration::Point), 1));
    const CurveClass moved =
        product(pushforward(product(pullback(xi_twisted, {1}, 3), exp_truncated(delta1 + delta2, 3)), 1), base_exp);
    const CurveClass dropped = product(pushforward(product(pr1_xi, exp_truncated(delta1 + delta2, 3)), 1), base_exp);
    out.trace = {
        {"pr2_*(pr1^*(xi) . exp(ell))", direct},
        {"pr2_*(pr1^*(xi) . exp(D1 + D2 - 2 pr1^*[x0])) . exp(-[x0 x C] - [C x x0])", split},
        {"pr2_*(pr1^*(xi . exp(-2[x0])) . exp(D1 + D2)) . exp(-[x0 x C] - [C x x0])", moved},
        {"pr2_*(pr1^*(xi) . exp(D1 + D2)) . exp(-[x0 x C] - [C x x0])", dropped},
    };
    out.trace_consistent = direct == split && split == moved && moved == dropped;

    out.q0 = codim_component(direct, 0);
    out.q1 = codim_component(direct, 1);
    out.q2 = codim_component(direct, 2);
    out.q1_squared = product(out.q1, out.q1);
    out.w = Coefficient(2) * (out.q1_squared - two_g_minus_two() * out.q2);
    out.z = z_cycle();
    out.verdict = out.w == out.z;
    return out;
}

}  // namespace tautcalc
