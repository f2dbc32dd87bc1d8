#pragma once

#include <pea/algebra.hpp>
#include <pea/measures.hpp>

#include <span>
#include <vector>

namespace pea {

/// Result of the decomposition-supremum (or infimum) formula together with
/// an optimal ordered decomposition x = x_1 + ... + x_n for every x.
struct LatticeResult {
    SignedMeasure value;
    std::vector<std::vector<Element>> parts;
};

/// (m_1 v ... v m_n)(x) = max{ m_1(x_1) + ... + m_n(x_n) : x = x_1 + ... + x_n },
/// evaluated by dynamic programming over left-associated prefix sums.
/// Requires RDP for the result to be additive; otherwise throws
/// Error(NotAdditive) with the failing triple as witness.
LatticeResult lattice_join(const PseudoEffectAlgebra& algebra, std::span<const SignedMeasure> measures);
/// Same with min.
LatticeResult lattice_meet(const PseudoEffectAlgebra& algebra, std::span<const SignedMeasure> measures);

SignedMeasure join(const PseudoEffectAlgebra& algebra, const SignedMeasure& x, const SignedMeasure& y);
SignedMeasure meet(const PseudoEffectAlgebra& algebra, const SignedMeasure& x, const SignedMeasure& y);
Measure join(const PseudoEffectAlgebra& algebra, const Measure& x, const Measure& y);
Measure meet(const PseudoEffectAlgebra& algebra, const Measure& x, const Measure& y);

/// A signed measure with a witness pair of measures, value = positive - negative.
struct JordanMeasure {
    SignedMeasure value;
    Measure positive;
    Measure negative;
};

/// m+ = m v 0 and m- = (-m) v 0, checked against m = m+ - m- and
/// m+ ^ m- = 0. Throws Error(NotJordan) when m is not a difference of
/// measures (detected through any of these failing).
JordanMeasure jordan_decompose(const PseudoEffectAlgebra& algebra, const SignedMeasure& m);

/// Pointwise supremum of a <=+ chain, cross-checked against the join
/// formula. Throws Error(NotAChain).
Measure chain_sup(const PseudoEffectAlgebra& algebra, std::span<const Measure> chain);

/// m_1 ^ m_2 == 0.
bool is_disjoint(const PseudoEffectAlgebra& algebra, const Measure& x, const Measure& y);

}  // namespace pea
