#include "tautcalc/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautcalc {

bool is_zero(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RowReducedBasis::Reduction RowReducedBasis::reduce(const RationalVector& v) const
{
    if (v.size() != columns_) throw std::invalid_argument("vector length does not match basis columns");
    Reduction r{v, RationalVector(rows_.size(), Rational(0))};
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational f = r.residual[pivots_[k]];
        if (f == 0) continue;
        r.coordinates[k] = f;
        const auto& row = rows_[k];
        for (std::size_t c = pivots_[k]; c < columns_; ++c)
            if (row[c] != 0) r.residual[c] -= f * row[c];
    }
    return r;
}

bool RowReducedBasis::insert(const RationalVector& v)
{
    RationalVector w = reduce(v).residual;
    auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
    if (it == w.end()) return false;
    std::size_t pivot = static_cast<std::size_t>(it - w.begin());
    Rational inv = 1 / w[pivot];
    for (auto& x : w) x *= inv;
    for (auto& row : rows_) {
        Rational f = row[pivot];
        if (f == 0) continue;
        for (std::size_t c = pivot; c < columns_; ++c)
            if (w[c] != 0) row[c] -= f * w[c];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

std::size_t rank(const RationalMatrix& m)
{
    if (m.empty()) return 0;
    RowReducedBasis basis(m.front().size());
    for (const auto& row : m) basis.insert(row);
    return basis.rank();
}

RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns)
{
    RowReducedBasis basis(columns);
    for (const auto& row : m) basis.insert(row);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : basis.pivots()) is_pivot[p] = true;
    RationalMatrix out;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(columns, Rational(0));
        x[free] = 1;
        for (std::size_t k = 0; k < basis.rank(); ++k) x[basis.pivots()[k]] = -basis.rows()[k][free];
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("right hand side length does not match rows");
    const std::size_t n = a.empty() ? 0 : a.front().size();
    RowReducedBasis augmented(n + 1);
    for (std::size_t r = 0; r < a.size(); ++r) {
        RationalVector row = a[r];
        row.push_back(b[r]);
        augmented.insert(row);
    }
    RationalVector x(n, Rational(0));
    for (std::size_t k = 0; k < augmented.rank(); ++k) {
        std::size_t p = augmented.pivots()[k];
        if (p == n) return std::nullopt;
        x[p] = augmented.rows()[k][n];
    }
    return x;
}

}  // namespace tautcalc
