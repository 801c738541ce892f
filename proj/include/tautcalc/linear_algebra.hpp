#pragma once

// Exact Gaussian elimination over Q.

#include "tautcalc/coefficient.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tautcalc {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

bool is_zero(const RationalVector& v);

/// Row space kept in fully reduced row echelon form: every pivot is 1,
/// pivot columns strictly increase, and pivot columns are zero in all other
/// rows. Pivots are chosen by fixed column order, so the stored basis depends
/// only on the row space.
class RowReducedBasis {
public:
    explicit RowReducedBasis(std::size_t columns = 0) : columns_(columns) {}

    struct Reduction {
        RationalVector residual;
        /// v = sum_k coordinates[k] * rows()[k] + residual
        RationalVector coordinates;
    };

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == columns_; }
    const RationalMatrix& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Reduction reduce(const RationalVector& v) const;
    bool contains(const RationalVector& v) const { return is_zero(reduce(v).residual); }
    /// Returns true when v enlarged the span.
    bool insert(const RationalVector& v);

private:
    std::size_t columns_;
    RationalMatrix rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const RationalMatrix& m);

/// A solution of a x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Basis of {x : m x = 0}, as column vectors of length columns.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns);

}  // namespace tautcalc
