#pragma once

#include <pea/error.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pea {

using ElementSet = boost::dynamic_bitset<>;

inline constexpr Element kUndefined = std::numeric_limits<Element>::max();

/// Guard on carrier size; validation is O(|E|^3).
inline constexpr std::size_t kMaxElements = 4096;

/// One defined sum a + b = c.
struct SumTriple {
    Element a;
    Element b;
    Element c;
    friend bool operator==(const SumTriple&, const SumTriple&) = default;
};

/// Same as SumTriple but by label, as read from a file.
struct LabeledTriple {
    std::string a;
    std::string b;
    std::string c;
};

/// Which defining condition an offending instance breaks.
enum class Axiom {
    Table,        // two different results for the same a + b
    Associativity,  // (i)
    Complement,   // (ii)
    Commutation,  // (iii)
    Unit,         // (iv)
    Order,        // the two order characterizations disagree or leq is not a partial order
    Cancellation, // differences are not unique
};

const char* axiom_name(Axiom axiom) noexcept;

struct AxiomInstance {
    Axiom axiom;
    std::vector<Element> elements;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomInstance> violations;
    bool truncated = false;
    bool ok() const noexcept { return violations.empty(); }
};

class ValidationError : public Error {
public:
    ValidationError(ValidationReport report, std::vector<std::string> labels);
    const ValidationReport& report() const noexcept { return report_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    ValidationReport report_;
    std::vector<std::string> labels_;
};

/// A finite pseudo effect algebra given by its partial addition table.
///
/// Instances are only produced by build_algebra(), which verifies axioms
/// (i)-(iv) exhaustively; afterwards the object is immutable. The order,
/// both differences and both complements are precomputed.
class PseudoEffectAlgebra {
public:
    std::size_t size() const noexcept { return labels_.size(); }
    Element zero() const noexcept { return zero_; }
    Element one() const noexcept { return one_; }

    const std::string& label(Element e) const { return labels_.at(e); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Element> find(std::string_view label) const;
    /// Throws Error(UnknownLabel).
    Element at(std::string_view label) const;

    bool defined(Element a, Element b) const noexcept { return sum_[index(a, b)] != kUndefined; }
    /// a + b, or kUndefined.
    Element sum(Element a, Element b) const noexcept { return sum_[index(a, b)]; }

    /// Every defined sum, sorted by (a, b).
    std::span<const SumTriple> sums() const noexcept { return triples_; }
    /// Every defined sum whose value is c.
    std::span<const SumTriple> decompositions(Element c) const noexcept;

    bool leq(Element a, Element b) const noexcept { return down_[b].test(a); }
    const ElementSet& down_set(Element b) const noexcept { return down_[b]; }
    const ElementSet& up_set(Element a) const noexcept { return up_[a]; }

    /// b \_l a: the d with d + a = b. kUndefined unless a <= b.
    Element left_diff(Element b, Element a) const noexcept { return ldiff_[index(b, a)]; }
    /// a \_r b: the c with a + c = b. kUndefined unless a <= b.
    Element right_diff(Element a, Element b) const noexcept { return rdiff_[index(a, b)]; }

    /// a^- = 1 \_l a, so a^- + a = 1.
    Element left_complement(Element a) const noexcept { return left_diff(one_, a); }
    /// a^~ = a \_r 1, so a + a^~ = 1.
    Element right_complement(Element a) const noexcept { return right_diff(a, one_); }

    bool is_commutative() const noexcept { return commutative_; }

    /// SHA-256 (hex) of the canonical text export.
    const std::string& hash() const noexcept { return hash_; }

    ElementSet empty_set() const { return ElementSet(size()); }

    friend bool operator==(const PseudoEffectAlgebra& x, const PseudoEffectAlgebra& y) {
        return x.labels_ == y.labels_ && x.zero_ == y.zero_ && x.one_ == y.one_ && x.sum_ == y.sum_;
    }

private:
    friend PseudoEffectAlgebra build_algebra(std::vector<std::string>, Element, Element,
                                             std::vector<SumTriple>);
    PseudoEffectAlgebra() = default;

    std::size_t index(Element a, Element b) const noexcept { return std::size_t(a) * labels_.size() + b; }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Element> by_label_;
    Element zero_ = 0;
    Element one_ = 0;
    std::vector<Element> sum_;
    std::vector<Element> ldiff_;
    std::vector<Element> rdiff_;
    std::vector<SumTriple> triples_;
    std::vector<SumTriple> by_value_;
    std::vector<std::size_t> by_value_start_;
    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
    bool commutative_ = true;
    std::string hash_;
};

/// Checks axioms (i)-(iv), functionality of the table, both order
/// characterizations and uniqueness of differences. Every violated instance
/// is listed (capped at `max_violations`, after which `truncated` is set).
ValidationReport validate_table(std::size_t size, Element zero, Element one,
                                std::span<const SumTriple> triples,
                                std::size_t max_violations = 100000);

/// Throws ValidationError on any axiom violation, Error(SizeLimitExceeded)
/// above kMaxElements, Error(DuplicateLabel) on repeated labels.
PseudoEffectAlgebra build_algebra(std::vector<std::string> labels, Element zero, Element one,
                                  std::vector<SumTriple> triples);

/// Label-based front end; also throws Error(UnknownLabel).
PseudoEffectAlgebra build_algebra(std::vector<std::string> labels, std::string_view zero,
                                  std::string_view one, std::span<const LabeledTriple> triples);

/// Greatest lower bound in (E, <=), if the set of lower bounds has a maximum.
std::optional<Element> poset_meet(const PseudoEffectAlgebra& e, Element a, Element b);
/// Least upper bound in (E, <=), if the set of upper bounds has a minimum.
std::optional<Element> poset_join(const PseudoEffectAlgebra& e, Element a, Element b);

std::vector<Element> members(const ElementSet& set);
ElementSet make_set(const PseudoEffectAlgebra& e, std::span<const Element> elements);

}  // namespace pea
