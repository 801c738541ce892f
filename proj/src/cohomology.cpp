#include "tautcalc/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

Factor Factor::curve(int genus, std::string label)
{
    if (genus < 0) throw std::invalid_argument("negative genus");
    return {FactorKind::Curve, genus, std::move(label)};
}

Factor Factor::abelian(int dim, std::string label)
{
    if (dim < 0 || dim > 15) throw std::invalid_argument("abelian dimension out of range");
    return {FactorKind::Abelian, dim, std::move(label)};
}

std::uint32_t Factor::basis_size() const
{
    return kind == FactorKind::Curve ? static_cast<std::uint32_t>(2 * genus + 2) : (1u << (2 * genus));
}

std::uint32_t Factor::top() const
{
    return kind == FactorKind::Curve ? static_cast<std::uint32_t>(2 * genus + 1) : (1u << (2 * genus)) - 1;
}

int Factor::degree(std::uint32_t local) const
{
    if (kind == FactorKind::Abelian) return std::popcount(local);
    if (local == 0) return 0;
    return local == top() ? 2 : 1;
}

std::uint32_t Factor::alpha(int i) const
{
    if (i < 1 || i > genus) throw std::out_of_range("generator index out of range");
    return kind == FactorKind::Curve ? static_cast<std::uint32_t>(i) : 1u << (2 * (i - 1));
}

std::uint32_t Factor::beta(int i) const
{
    if (i < 1 || i > genus) throw std::out_of_range("generator index out of range");
    return kind == FactorKind::Curve ? static_cast<std::uint32_t>(genus + i) : 1u << (2 * (i - 1) + 1);
}

std::string Factor::render(std::uint32_t local) const
{
    if (local == 0) return "1";
    if (kind == FactorKind::Curve) {
        if (local == top()) return "pt";
        auto i = static_cast<int>(local);
        return i <= genus ? "a" + std::to_string(i) : "b" + std::to_string(i - genus);
    }
    std::string s;
    for (int bit = 0; bit < 2 * genus; ++bit) {
        if (!(local & (1u << bit))) continue;
        if (!s.empty()) s += "*";
        s += (bit % 2 == 0 ? "al" : "be") + std::to_string(bit / 2 + 1);
    }
    return s;
}

bool same_shape(const FactorSpec& a, const FactorSpec& b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

namespace {

struct LocalProduct {
    int sign;  // 0 when the product vanishes
    std::uint32_t local;
};

LocalProduct local_product(const Factor& f, std::uint32_t x, std::uint32_t y)
{
    if (x == 0) return {1, y};
    if (y == 0) return {1, x};
    if (f.kind == FactorKind::Curve) {
        auto h = static_cast<std::uint32_t>(f.genus);
        if (x <= h && y == x + h) return {1, f.top()};
        if (x > h && x <= 2 * h && y + h == x) return {-1, f.top()};
        return {0, 0};
    }
    if (x & y) return {0, 0};
    // sort the concatenated word x y: count pairs (u in x, v in y) with u > v
    int swaps = 0;
    for (std::uint32_t rest = y; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        swaps += std::popcount(x >> (v + 1));
    }
    return {swaps % 2 ? -1 : 1, x | y};
}

void check_same_spec(const CohomClass& x, const CohomClass& y)
{
    if (!same_shape(x.spec(), y.spec())) throw std::invalid_argument("mismatched factor specs");
}

}  // namespace

CohomClass::CohomClass(FactorSpec spec) : spec_(std::move(spec)) {}

CohomClass CohomClass::unit(const FactorSpec& spec) { return basis(spec, TensorKey(spec.size(), 0)); }

CohomClass CohomClass::basis(const FactorSpec& spec, const TensorKey& key, const Rational& c)
{
    if (key.size() != spec.size()) throw std::invalid_argument("key length does not match spec");
    for (std::size_t k = 0; k < key.size(); ++k)
        if (key[k] >= spec[k].basis_size()) throw std::out_of_range("local basis index out of range");
    CohomClass x(spec);
    x.add_term(key, c);
    return x;
}

CohomClass CohomClass::on_factor(const FactorSpec& spec, std::size_t factor, std::uint32_t local, const Rational& c)
{
    TensorKey key(spec.size(), 0);
    key.at(factor) = local;
    return basis(spec, key, c);
}

CohomClass CohomClass::theta(const FactorSpec& spec, std::size_t factor)
{
    const Factor& f = spec.at(factor);
    if (f.kind != FactorKind::Abelian) throw std::invalid_argument("theta needs an abelian factor");
    CohomClass x(spec);
    for (int i = 1; i <= f.genus; ++i) x += on_factor(spec, factor, f.alpha(i) | f.beta(i));
    return x;
}

CohomClass CohomClass::total_theta(const FactorSpec& spec)
{
    CohomClass x(spec);
    for (std::size_t k = 0; k < spec.size(); ++k)
        if (spec[k].kind == FactorKind::Abelian) x += theta(spec, k);
    return x;
}

Rational CohomClass::coefficient(const TensorKey& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CohomClass::add_term(const TensorKey& key, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int CohomClass::total_degree(const TensorKey& key) const
{
    int d = 0;
    for (std::size_t k = 0; k < key.size(); ++k) d += spec_[k].degree(key[k]);
    return d;
}

KunnethIndex CohomClass::kunneth_index(const TensorKey& key) const
{
    KunnethIndex idx(key.size());
    for (std::size_t k = 0; k < key.size(); ++k) idx[k] = spec_[k].degree(key[k]);
    return idx;
}

CohomClass& CohomClass::operator+=(const CohomClass& o)
{
    check_same_spec(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

CohomClass& CohomClass::operator-=(const CohomClass& o)
{
    check_same_spec(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

CohomClass operator*(const Rational& c, const CohomClass& x)
{
    CohomClass r(x.spec_);
    if (c == 0) return r;
    for (const auto& [k, v] : x.terms_) r.terms_.emplace(k, c * v);
    return r;
}

CohomClass CohomClass::operator-() const { return Rational(-1) * *this; }

CohomClass CohomClass::pow(int exponent) const
{
    CohomClass r = unit(spec_);
    for (int k = 0; k < exponent; ++k) r = cup(r, *this);
    return r;
}

bool operator==(const CohomClass& a, const CohomClass& b) { return same_shape(a.spec_, b.spec_) && a.terms_ == b.terms_; }

std::string CohomClass::render_key(const FactorSpec& spec, const TensorKey& key)
{
    std::string s;
    for (std::size_t k = 0; k < key.size(); ++k) {
        if (k) s += " | ";
        s += spec[k].render(key[k]);
    }
    return s;
}

std::string CohomClass::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational mag = abs(c);
        if (mag != 1) os << tautcalc::to_string(mag) << "*";
        os << "[" << render_key(spec_, k) << "]";
    }
    return os.str();
}

CohomClass cup(const CohomClass& x, const CohomClass& y)
{
    check_same_spec(x, y);
    const FactorSpec& spec = x.spec();
    const std::size_t n = spec.size();
    CohomClass r(spec);
    std::vector<int> suffix(n + 1, 0);
    TensorKey out(n);
    for (const auto& [kx, cx] : x.terms()) {
        // suffix[i] = sum of degrees of x on factors > i
        suffix[n] = 0;
        for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + (i + 1 < n ? spec[i + 1].degree(kx[i + 1]) : 0);
        for (const auto& [ky, cy] : y.terms()) {
            int sign = 1;
            int koszul = 0;
            bool zero = false;
            for (std::size_t i = 0; i < n; ++i) {
                auto p = local_product(spec[i], kx[i], ky[i]);
                if (p.sign == 0) {
                    zero = true;
                    break;
                }
                sign *= p.sign;
                out[i] = p.local;
                // y_i moves past x_j for every j > i
                koszul += spec[i].degree(ky[i]) * suffix[i];
            }
            if (zero) continue;
            if (koszul % 2) sign = -sign;
            Rational v = cx * cy;
            if (sign < 0) v = -v;
            r.add_term(out, v);
        }
    }
    return r;
}

CohomClass tensor(const CohomClass& x, const CohomClass& y)
{
    FactorSpec spec = x.spec();
    spec.insert(spec.end(), y.spec().begin(), y.spec().end());
    CohomClass r(spec);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            TensorKey k = kx;
            k.insert(k.end(), ky.begin(), ky.end());
            r.add_term(k, cx * cy);
        }
    return r;
}

CohomClass permute(const CohomClass& x, const std::vector<std::size_t>& order)
{
    const std::size_t n = x.spec().size();
    if (order.size() != n) throw std::invalid_argument("permutation length does not match spec");
    std::vector<bool> seen(n, false);
    for (auto o : order) {
        if (o >= n || seen[o]) throw std::invalid_argument("not a permutation");
        seen[o] = true;
    }
    FactorSpec spec(n);
    for (std::size_t k = 0; k < n; ++k) spec[k] = x.spec()[order[k]];
    CohomClass r(spec);
    for (const auto& [key, c] : x.terms()) {
        TensorKey out(n);
        int koszul = 0;
        for (std::size_t a = 0; a < n; ++a) {
            out[a] = key[order[a]];
            for (std::size_t b = a + 1; b < n; ++b)
                if (order[a] > order[b])
                    koszul += x.spec()[order[a]].degree(key[order[a]]) * x.spec()[order[b]].degree(key[order[b]]);
        }
        r.add_term(out, koszul % 2 ? Rational(-c) : c);
    }
    return r;
}

CohomClass integrate(const CohomClass& x, std::size_t factor)
{
    const FactorSpec& spec = x.spec();
    if (factor >= spec.size()) throw std::out_of_range("factor out of range");
    FactorSpec rest = spec;
    rest.erase(rest.begin() + static_cast<long>(factor));
    CohomClass r(rest);
    const std::uint32_t top = spec[factor].top();
    // the top class has even degree, so moving it to the front costs no sign
    for (const auto& [key, c] : x.terms()) {
        if (key[factor] != top) continue;
        TensorKey out = key;
        out.erase(out.begin() + static_cast<long>(factor));
        r.add_term(out, c);
    }
    return r;
}

Rational integrate_all(const CohomClass& x)
{
    TensorKey top(x.spec().size());
    for (std::size_t k = 0; k < top.size(); ++k) top[k] = x.spec()[k].top();
    return x.coefficient(top);
}

CohomClass kunneth_component(const CohomClass& x, const KunnethIndex& index)
{
    if (index.size() != x.spec().size()) throw std::invalid_argument("Kunneth index length does not match spec");
    CohomClass r(x.spec());
    for (const auto& [key, c] : x.terms())
        if (x.kunneth_index(key) == index) r.add_term(key, c);
    return r;
}

CohomClass partial_degree_component(const CohomClass& x, const std::set<std::size_t>& factors, int degree)
{
    CohomClass r(x.spec());
    for (const auto& [key, c] : x.terms()) {
        int d = 0;
        for (auto f : factors) d += x.spec().at(f).degree(key[f]);
        if (d == degree) r.add_term(key, c);
    }
    return r;
}

std::vector<KunnethIndex> kunneth_support(const CohomClass& x)
{
    std::set<KunnethIndex> s;
    for (const auto& [key, c] : x.terms()) s.insert(x.kunneth_index(key));
    return {s.begin(), s.end()};
}

CohomClass apply_homomorphism(const CohomClass& x, const GeneratorImages& hom)
{
    const FactorSpec& spec = x.spec();
    if (hom.images.size() != spec.size()) throw std::invalid_argument("homomorphism needs images for every factor");
    std::vector<std::map<std::uint32_t, CohomClass>> cache(spec.size());
    auto image_of = [&](std::size_t k, std::uint32_t local) -> const CohomClass& {
        auto it = cache[k].find(local);
        if (it != cache[k].end()) return it->second;
        const Factor& f = spec[k];
        CohomClass img = CohomClass::unit(hom.target);
        auto lookup = [&](std::uint32_t gen) -> const CohomClass& {
            auto g = hom.images[k].find(gen);
            if (g == hom.images[k].end()) throw std::invalid_argument("missing generator image");
            return g->second;
        };
        if (local != 0) {
            if (f.kind == FactorKind::Curve) {
                img = lookup(local);
            } else {
                for (int bit = 0; bit < 2 * f.genus; ++bit)
                    if (local & (1u << bit)) img = cup(img, lookup(1u << bit));
            }
        }
        return cache[k].emplace(local, std::move(img)).first->second;
    };
    CohomClass r(hom.target);
    for (const auto& [key, c] : x.terms()) {
        CohomClass term = CohomClass::unit(hom.target);
        for (std::size_t k = 0; k < spec.size() && !term.is_zero(); ++k)
            if (key[k] != 0) term = cup(term, image_of(k, key[k]));
        r += c * term;
    }
    return r;
}

namespace {

// Images sending factor k of `source` identically onto factor slot[k] of `target`.
std::map<std::uint32_t, CohomClass> identity_images(const Factor& f, const FactorSpec& target, std::size_t slot)
{
    std::map<std::uint32_t, CohomClass> m;
    for (int i = 1; i <= f.genus; ++i) {
        m.emplace(f.alpha(i), CohomClass::on_factor(target, slot, f.alpha(i)));
        m.emplace(f.beta(i), CohomClass::on_factor(target, slot, f.beta(i)));
    }
    if (f.kind == FactorKind::Curve) m.emplace(f.top(), CohomClass::on_factor(target, slot, f.top()));
    return m;
}

}  // namespace

CohomClass coproduct(const CohomClass& x, std::size_t factor)
{
    const FactorSpec& spec = x.spec();
    const Factor& f = spec.at(factor);
    if (f.kind != FactorKind::Abelian) throw std::invalid_argument("coproduct needs an abelian factor");
    FactorSpec target = spec;
    target.insert(target.begin() + static_cast<long>(factor) + 1, f);
    GeneratorImages hom{target, {}};
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (k != factor) {
            hom.images.push_back(identity_images(spec[k], target, k < factor ? k : k + 1));
            continue;
        }
        std::map<std::uint32_t, CohomClass> m;
        for (int i = 1; i <= f.genus; ++i)
            for (auto gen : {f.alpha(i), f.beta(i)})
                m.emplace(gen, CohomClass::on_factor(target, factor, gen) + CohomClass::on_factor(target, factor + 1, gen));
        hom.images.push_back(std::move(m));
    }
    return apply_homomorphism(x, hom);
}

CohomClass negation(const CohomClass& x, std::size_t factor)
{
    const Factor& f = x.spec().at(factor);
    if (f.kind != FactorKind::Abelian) throw std::invalid_argument("negation needs an abelian factor");
    CohomClass r(x.spec());
    for (const auto& [key, c] : x.terms()) r.add_term(key, f.degree(key[factor]) % 2 ? Rational(-c) : c);
    return r;
}

CohomClass aj_transfer(const CohomClass& x, std::size_t factor)
{
    const FactorSpec& spec = x.spec();
    const Factor& f = spec.at(factor);
    if (f.kind != FactorKind::Abelian) throw std::invalid_argument("Abel-Jacobi transfer needs an abelian factor");
    FactorSpec target = spec;
    target[factor] = Factor::curve(f.genus, f.label);
    GeneratorImages hom{target, {}};
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (k != factor) {
            hom.images.push_back(identity_images(spec[k], target, k));
            continue;
        }
        const Factor& c = target[factor];
        std::map<std::uint32_t, CohomClass> m;
        for (int i = 1; i <= f.genus; ++i) {
            m.emplace(f.alpha(i), CohomClass::on_factor(target, factor, c.alpha(i)));
            m.emplace(f.beta(i), CohomClass::on_factor(target, factor, c.beta(i)));
        }
        hom.images.push_back(std::move(m));
    }
    return apply_homomorphism(x, hom);
}

CohomClass fourier(const CohomClass& x, const std::set<std::size_t>& fiber)
{
    const FactorSpec& spec = x.spec();
    const std::size_t n = spec.size();
    for (auto f : fiber)
        if (f >= n || spec[f].kind != FactorKind::Abelian) throw std::invalid_argument("Fourier fiber factors must be abelian");
    if (fiber.empty()) return x;

    // source factors keep their places; the dual copies are appended
    FactorSpec doubled = spec;
    std::vector<std::size_t> copy_of;
    for (auto f : fiber) {
        doubled.push_back(spec[f]);
        copy_of.push_back(f);
    }
    CohomClass kernel = CohomClass::unit(doubled);
    for (std::size_t c = 0; c < copy_of.size(); ++c) {
        const std::size_t src = copy_of[c];
        const std::size_t dst = n + c;
        const Factor& f = spec[src];
        // exp of a sum of commuting square-zero even classes is the product of (1 + t)
        for (int i = 1; i <= f.genus; ++i) {
            CohomClass ab = cup(CohomClass::on_factor(doubled, src, f.alpha(i)), CohomClass::on_factor(doubled, dst, f.beta(i)));
            CohomClass ba = cup(CohomClass::on_factor(doubled, src, f.beta(i)), CohomClass::on_factor(doubled, dst, f.alpha(i)));
            kernel = cup(kernel, CohomClass::unit(doubled) + ab);
            kernel = cup(kernel, CohomClass::unit(doubled) - ba);
        }
    }
    CohomClass lifted = tensor(x, CohomClass::unit(FactorSpec(doubled.begin() + static_cast<long>(n), doubled.end())));
    CohomClass y = cup(lifted, kernel);
    for (auto it = fiber.rbegin(); it != fiber.rend(); ++it) y = integrate(y, *it);

    // y lives on (spec minus fiber) followed by the copies; move copies back
    std::vector<std::size_t> order(n);
    std::size_t kept = 0;
    std::size_t copy = n - fiber.size();
    for (std::size_t k = 0; k < n; ++k) order[k] = fiber.count(k) ? copy++ : kept++;
    CohomClass out = permute(y, order);
    // restore labels
    CohomClass relabeled(spec);
    for (const auto& [key, c] : out.terms()) relabeled.add_term(key, c);
    return relabeled;
}

std::vector<TensorKey> all_keys(const FactorSpec& spec)
{
    std::vector<TensorKey> out{TensorKey{}};
    for (const auto& f : spec) {
        std::vector<TensorKey> next;
        for (const auto& k : out)
            for (std::uint32_t l = 0; l < f.basis_size(); ++l) {
                TensorKey e = k;
                e.push_back(l);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

RationalMatrix poincare_pairing(const FactorSpec& spec)
{
    auto keys = all_keys(spec);
    RationalMatrix m(keys.size(), RationalVector(keys.size(), Rational(0)));
    for (std::size_t a = 0; a < keys.size(); ++a) {
        CohomClass ea = CohomClass::basis(spec, keys[a]);
        for (std::size_t b = 0; b < keys.size(); ++b)
            m[a][b] = integrate_all(cup(ea, CohomClass::basis(spec, keys[b])));
    }
    return m;
}

CohomClass poincare_dual(const FactorSpec& spec, const std::vector<Rational>& functional)
{
    auto keys = all_keys(spec);
    if (functional.size() != keys.size()) throw std::invalid_argument("functional length does not match basis");
    RationalMatrix g = poincare_pairing(spec);
    // sum_k c_k <e_k, e_l> = functional_l, i.e. g^T c = functional
    RationalMatrix gt(keys.size(), RationalVector(keys.size()));
    for (std::size_t a = 0; a < keys.size(); ++a)
        for (std::size_t b = 0; b < keys.size(); ++b) gt[a][b] = g[b][a];
    auto c = solve(gt, functional);
    if (!c) throw std::runtime_error("Poincare pairing is degenerate");
    CohomClass r(spec);
    for (std::size_t k = 0; k < keys.size(); ++k) r.add_term(keys[k], (*c)[k]);
    return r;
}

RationalVector coordinates(const CohomClass& x, const std::vector<TensorKey>& keys)
{
    RationalVector v;
    v.reserve(keys.size());
    for (const auto& k : keys) v.push_back(x.coefficient(k));
    return v;
}

}  // namespace tautcalc
