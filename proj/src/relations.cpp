#include "tautcalc/relations.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tautcalc {

std::vector<TautMonomial> enumerate_monomials(Bidegree b)
{
    std::vector<TautMonomial> out;
    if (!b.valid()) return out;
    std::vector<Generator> gens;
    for (int i = 1; i <= b.codim; ++i) gens.push_back({GenKind::P, i});
    for (int i = 1; i <= b.codim; ++i) gens.push_back({GenKind::Q, i});

    // multisets of generators with total codim b.codim; prune on p-degree,
    // since codim - index counts p-factors
    const int p_needed = b.codim - b.index;
    std::function<void(std::size_t, int, int, const TautMonomial&)> rec = [&](std::size_t k, int codim_left,
                                                                               int p_left, const TautMonomial& m) {
        if (codim_left == 0) {
            if (p_left == 0) out.push_back(m);
            return;
        }
        if (k == gens.size()) return;
        const Generator gen = gens[k];
        const bool is_p = gen.kind == GenKind::P;
        for (int e = 0; e * gen.codim() <= codim_left; ++e) {
            if (is_p && e > p_left) break;
            rec(k + 1, codim_left - e * gen.codim(), is_p ? p_left - e : p_left, m.times(gen, e));
        }
    };
    rec(0, b.codim, p_needed, TautMonomial{});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TautMonomial> dimension_seeds(int genus, int bound)
{
    std::vector<TautMonomial> out;
    for (int c = genus + 1; c <= bound; ++c)
        for (int j = 0; j <= c; ++j) {
            auto ms = enumerate_monomials({c, j});
            out.insert(out.end(), ms.begin(), ms.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(DerivationStep::Kind kind)
{
    switch (kind) {
    case DerivationStep::Kind::Seed: return "seed";
    case DerivationStep::Kind::Differential: return "D";
    case DerivationStep::Kind::Multiply: return "multiply";
    }
    return "?";
}

std::string to_string(VerdictFlag flag) { return flag == VerdictFlag::DerivedZero ? "DERIVED_ZERO" : "NOT_DERIVED"; }

RelationSpan::RelationSpan(int genus, int bound) : genus_(genus), bound_(bound)
{
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    if (bound < genus) throw std::invalid_argument("codim bound must be at least the genus");
    for (int c = 0; c <= bound; ++c)
        for (int j = 0; j <= c; ++j) {
            Slot s;
            s.columns = enumerate_monomials({c, j});
            for (std::size_t k = 0; k < s.columns.size(); ++k) s.column_of.emplace(s.columns[k], k);
            s.basis = RowReducedBasis(s.columns.size());
            slots_.emplace(Bidegree{c, j}, std::move(s));
        }
    // seeds, graded by descending codim
    auto seeds = dimension_seeds(genus, bound);
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const TautMonomial& a, const TautMonomial& b) { return a.codim() > b.codim(); });
    for (const auto& m : seeds) offer({DerivationStep::Kind::Seed, std::nullopt, std::nullopt, m.bidegree(), TautElement(m)});
    run_queue();
}

std::vector<Bidegree> RelationSpan::bidegrees() const
{
    std::vector<Bidegree> out;
    for (const auto& [b, s] : slots_) out.push_back(b);
    return out;
}

RelationSpan::Slot& RelationSpan::slot(Bidegree b)
{
    auto it = slots_.find(b);
    if (it == slots_.end()) throw BoundError("bidegree out of bound");
    return it->second;
}

const RelationSpan::Slot& RelationSpan::slot(Bidegree b) const
{
    auto it = slots_.find(b);
    if (it == slots_.end()) throw BoundError("bidegree out of bound");
    return it->second;
}

const std::vector<TautMonomial>& RelationSpan::columns(Bidegree b) const { return slot(b).columns; }

const RowReducedBasis& RelationSpan::rows(Bidegree b) const { return slot(b).basis; }

std::vector<TautElement> RelationSpan::relations(Bidegree b) const
{
    std::vector<TautElement> out;
    for (const auto& row : rows(b).rows()) out.push_back(to_element(row, b));
    return out;
}

RationalVector RelationSpan::to_vector(const TautElement& x, Bidegree b) const
{
    const Slot& s = slot(b);
    RationalVector v(s.columns.size(), Rational(0));
    for (const auto& [m, c] : x.terms()) {
        auto it = s.column_of.find(m);
        if (it == s.column_of.end()) throw std::invalid_argument("term " + m.to_string() + " is not in the bidegree");
        if (!c.is_constant()) throw std::invalid_argument("coefficient depends on g; substitute the genus first");
        v[it->second] = c.constant();
    }
    return v;
}

TautElement RelationSpan::to_element(const RationalVector& v, Bidegree b) const
{
    const Slot& s = slot(b);
    TautElement x;
    for (std::size_t k = 0; k < v.size(); ++k) x.add_term(s.columns[k], Coefficient(v[k]));
    return x;
}

bool RelationSpan::offer(DerivationStep step)
{
    if (step.element.is_zero() || !in_bound(step.bidegree)) return false;
    Slot& s = slot(step.bidegree);
    if (s.basis.full()) return false;
    if (!s.basis.insert(to_vector(step.element, step.bidegree))) return false;
    log_.push_back(std::move(step));
    return true;
}

std::size_t RelationSpan::run_queue()
{
    std::size_t before = log_.size();
    const Rational g(genus_);
    while (processed_ < log_.size()) {
        const std::size_t k = processed_++;
        // copy: offer() may reallocate log_
        const TautElement x = log_[k].element;
        const Bidegree b = log_[k].bidegree;
        if (b.codim >= 1 && b.index <= b.codim - 1)
            offer({DerivationStep::Kind::Differential, k, std::nullopt, {b.codim - 1, b.index}, substitute_genus(op_D(x), g)});
        for (int i = 1; b.codim + i <= bound_; ++i) {
            for (GenKind kind : {GenKind::P, GenKind::Q}) {
                Generator gen{kind, i};
                Bidegree target{b.codim + i, b.index + gen.beauville_index()};
                if (slot(target).basis.full()) continue;
                offer({DerivationStep::Kind::Multiply, k, gen, target, TautElement(TautMonomial::of(gen)) * x});
            }
        }
    }
    return log_.size() - before;
}

std::size_t RelationSpan::saturate()
{
    // replay every accepted relation through the closure rules once more
    processed_ = 0;
    return run_queue();
}

std::vector<std::size_t> RelationSpan::ancestry(std::size_t index) const
{
    std::set<std::size_t> seen;
    std::vector<std::size_t> stack{index};
    while (!stack.empty()) {
        auto k = stack.back();
        stack.pop_back();
        if (!seen.insert(k).second) continue;
        if (log_.at(k).parent) stack.push_back(*log_[k].parent);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::size_t> RelationSpan::steps_in(Bidegree b) const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < log_.size(); ++k)
        if (log_[k].bidegree == b) out.push_back(k);
    return out;
}

std::string RelationSpan::replay_check() const
{
    const Rational g(genus_);
    std::map<Bidegree, RowReducedBasis> replayed;
    for (std::size_t k = 0; k < log_.size(); ++k) {
        const auto& step = log_[k];
        TautElement expect;
        switch (step.kind) {
        case DerivationStep::Kind::Seed:
            if (step.element.terms().size() != 1 || step.element.terms().begin()->second != Coefficient(1) ||
                step.element.max_codim() <= genus_)
                return "step " + std::to_string(k) + " is not a dimension seed";
            expect = step.element;
            break;
        case DerivationStep::Kind::Differential:
            if (!step.parent || *step.parent >= k) return "step " + std::to_string(k) + " has a bad parent";
            expect = substitute_genus(op_D(log_[*step.parent].element), g);
            break;
        case DerivationStep::Kind::Multiply:
            if (!step.parent || *step.parent >= k || !step.generator)
                return "step " + std::to_string(k) + " has a bad parent";
            expect = TautElement(TautMonomial::of(*step.generator)) * log_[*step.parent].element;
            break;
        }
        if (expect != step.element) return "step " + std::to_string(k) + " does not replay";
        auto [it, _] = replayed.try_emplace(step.bidegree, columns(step.bidegree).size());
        it->second.insert(to_vector(expect, step.bidegree));
    }
    for (const auto& [b, s] : slots_) {
        auto it = replayed.find(b);
        std::size_t r = it == replayed.end() ? 0 : it->second.rank();
        if (r != s.basis.rank()) return "rank mismatch in bidegree (" + std::to_string(b.codim) + "," + std::to_string(b.index) + ")";
        for (const auto& row : s.basis.rows())
            if (!it->second.contains(row)) return "row outside replayed span";
    }
    return {};
}

Verdict membership(const TautElement& x, const RelationSpan& span)
{
    Verdict v;
    v.target = x;
    if (x.is_zero()) {
        v.flag = VerdictFlag::DerivedZero;
        return v;
    }
    auto bs = bidegrees(x);
    if (bs.size() != 1) throw std::invalid_argument("target is not homogeneous");
    v.bidegree = bs.front();
    if (!span.in_bound(v.bidegree))
        throw BoundError("target codim " + std::to_string(v.bidegree.codim) + " exceeds the bound " + std::to_string(span.bound()));
    if (!x.is_numeric()) throw std::invalid_argument("target coefficients depend on g; substitute the genus first");
    auto red = span.rows(v.bidegree).reduce(span.to_vector(x, v.bidegree));
    v.coordinates = red.coordinates;
    v.residual = span.to_element(red.residual, v.bidegree);
    v.flag = v.residual.is_zero() ? VerdictFlag::DerivedZero : VerdictFlag::NotDerived;
    return v;
}

Verdict check_w(const RelationSpan& span)
{
    return membership(substitute_genus(TautElement::w_cycle(), Rational(span.genus())), span);
}

Verdict check_w(int genus, int bound) { return check_w(RelationSpan(genus, bound)); }

}  // namespace tautcalc
