#pragma once

#include <pea/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace pea {

using RationalMatrix = std::vector<RationalVector>;

/// Solution set of a linear system A x = b over the rationals, written as
/// x = offset + sum_k y_k * directions[k], where y_k = x[free_columns[k]].
struct AffineSolution {
    std::vector<std::size_t> free_columns;
    RationalVector offset;
    RationalMatrix directions;

    std::size_t dimension() const noexcept { return free_columns.size(); }
    /// offset + sum_k y[k] * directions[k]
    RationalVector evaluate(const RationalVector& y) const;
};

/// Reduced row echelon elimination. `rows` are augmented: the last entry of
/// each row is the right-hand side. Returns nullopt if the system is
/// inconsistent.
std::optional<AffineSolution> solve_affine(const RationalMatrix& rows, std::size_t columns);

std::size_t rank(RationalMatrix rows);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& square);

Rational dot(const RationalVector& x, const RationalVector& y);

/// Scales a nonzero vector to a primitive integer vector (gcd 1) with the
/// same direction.
void make_primitive(RationalVector& v);

}  // namespace pea
