#pragma once

#include <pea/linalg.hpp>

namespace pea {

/// Vertices of the bounded polyhedron {y : rows[i] . y + offsets[i] >= 0}
/// by the double description method on its homogenization.
///
/// Constraints are inserted in input order and adjacency is decided by the
/// combinatorial test, so the output depends only on the input. The rows
/// must span the space (true for every bounded nonempty polyhedron);
/// otherwise Error(InternalInconsistency) is thrown.
std::vector<RationalVector> polytope_vertices(const RationalMatrix& rows, const RationalVector& offsets,
                                              std::size_t dimension);

}  // namespace pea
