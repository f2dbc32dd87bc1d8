#pragma once

#include <pea/algebra.hpp>

#include <string_view>
#include <vector>

namespace pea {

enum class GroupOrder { Coordinatewise, Lexicographic };

/// Z^k with the chosen order and unit u (k = unit.size()).
struct PoGroupSpec {
    GroupOrder order = GroupOrder::Coordinatewise;
    std::vector<long> unit;
};

/// Power set of an n-set. Labels are n-character bit strings, most
/// significant bit first; element index equals the bitmask.
PseudoEffectAlgebra boolean_algebra(unsigned n);
/// {0, 1, ..., n} with i + j defined iff i + j <= n.
PseudoEffectAlgebra chain_algebra(unsigned n);
/// {0, a, a', b, b', 1} with a + a' = a' + a = 1 = b + b' = b' + b.
PseudoEffectAlgebra diamond_algebra();
/// Disjoint union glued at 0 and 1; inner labels get prefixes "L:" and "R:".
PseudoEffectAlgebra horizontal_sum(const PseudoEffectAlgebra& left, const PseudoEffectAlgebra& right);
/// Componentwise addition; labels "(x,y)".
PseudoEffectAlgebra product(const PseudoEffectAlgebra& left, const PseudoEffectAlgebra& right);

/// Gamma(G, u) = [0, u] with x + y defined iff x + y <= u. Labels are the
/// integer for k = 1 and "(x1,...,xk)" otherwise.
/// Throws Error(NotStrongUnit) unless u is a strong unit and
/// Error(IntervalInfinite) when [0, u] is infinite.
PseudoEffectAlgebra interval_algebra(const PoGroupSpec& spec);

/// Builds an algebra from an expression such as
///   boolean(3), chain(4), diamond, interval(coordinatewise,2,1),
///   horizontal_sum(chain(2),chain(2)), product(chain(2),boolean(2)).
/// Throws Error(UnknownZooName), Error(SizeLimitExceeded), Error(Parse).
PseudoEffectAlgebra zoo(std::string_view expression);

}  // namespace pea
