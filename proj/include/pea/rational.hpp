#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pea {

/// Exact arbitrary-precision rational. All measure values and LP data use it.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q" in lowest terms with q > 0; integers are written without "/1".
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" (optional leading '-'); the result is canonicalized.
/// Throws Error(Errc::Parse) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated values, no spaces.
std::string join_values(std::span<const Rational> values);

}  // namespace pea
