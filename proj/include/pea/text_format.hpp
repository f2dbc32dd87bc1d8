#pragma once

#include <pea/algebra.hpp>
#include <pea/rational.hpp>

#include <string>
#include <string_view>

namespace pea {

class SignedMeasure;

/// Labels are non-empty, contain no whitespace and none of '+', '=', '#',
/// and do not start with '['.
bool is_valid_label(std::string_view label) noexcept;

/// Algebra text format:
///
///     elements: 0 a b 1
///     zero: 0
///     one: 1
///     a + b = 1
///     ...
///
/// The body is either `x + y = z` lines or one JSON array of 3-element
/// label arrays. Lines starting with '#' are comments. Triple order is
/// irrelevant.
PseudoEffectAlgebra parse_algebra(std::string_view text);

/// Canonical export: header, then triples sorted by (a, b) element index.
std::string export_algebra(const PseudoEffectAlgebra& algebra);

/// Measure text format: `algebra: <hash>` then one `label = p/q` line per
/// element, in element order.
SignedMeasure parse_measure(const PseudoEffectAlgebra& algebra, std::string_view text);
std::string export_measure(const PseudoEffectAlgebra& algebra, const SignedMeasure& measure);

std::string sha256_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pea
