#include <pea/algebra.hpp>
#include <pea/text_format.hpp>

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace pea {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::IntervalInfinite: return "IntervalInfinite";
    case Errc::NotStrongUnit: return "NotStrongUnit";
    case Errc::UnknownZooName: return "UnknownZooName";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::Parse: return "ParseError";
    case Errc::Io: return "IoError";
    case Errc::AdditivityViolation: return "AdditivityViolation";
    case Errc::NotAMeasure: return "NotAMeasure";
    case Errc::NotAState: return "NotAState";
    case Errc::EmptyStateSpace: return "EmptyStateSpace";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotAdditive: return "NotAdditive";
    case Errc::NotJordan: return "NotJordan";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotASimplex: return "NotASimplex";
    case Errc::LPInfeasible: return "LPInfeasible";
    case Errc::RDPRequired: return "RDPRequired";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

int exit_code_for(Errc code) noexcept {
    switch (code) {
    case Errc::Parse:
    case Errc::Io:
    case Errc::DuplicateLabel:
    case Errc::UnknownLabel:
    case Errc::UnknownZooName:
    case Errc::SizeLimitExceeded:
    case Errc::AlgebraMismatch:
        return 2;
    case Errc::InternalInconsistency:
    case Errc::LPInfeasible:
        return 3;
    default:
        return 1;
    }
}

const char* axiom_name(Axiom axiom) noexcept {
    switch (axiom) {
    case Axiom::Table: return "table";
    case Axiom::Associativity: return "i";
    case Axiom::Complement: return "ii";
    case Axiom::Commutation: return "iii";
    case Axiom::Unit: return "iv";
    case Axiom::Order: return "order";
    case Axiom::Cancellation: return "cancellation";
    }
    return "?";
}

namespace {

std::string describe(const ValidationReport& report, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << report.violations.size() << (report.truncated ? "+" : "") << " violated instance(s)";
    std::size_t shown = 0;
    for (const auto& v : report.violations) {
        if (shown++ == 5) {
            out << "; ...";
            break;
        }
        out << "; (" << axiom_name(v.axiom) << ")";
        for (Element x : v.elements) out << ' ' << (x < labels.size() ? labels[x] : std::to_string(x));
        if (!v.detail.empty()) out << " [" << v.detail << ']';
    }
    return out.str();
}

}  // namespace

ValidationError::ValidationError(ValidationReport report, std::vector<std::string> labels)
    : Error(Errc::AxiomViolation, describe(report, labels)),
      report_(std::move(report)), labels_(std::move(labels)) {}

ValidationReport validate_table(std::size_t n, Element zero, Element one,
                                std::span<const SumTriple> triples, std::size_t max_violations) {
    ValidationReport report;
    auto add = [&](Axiom axiom, std::vector<Element> elements, std::string detail = {}) {
        if (report.violations.size() >= max_violations) {
            report.truncated = true;
            return;
        }
        report.violations.push_back({axiom, std::move(elements), std::move(detail)});
    };
    if (zero >= n || one >= n) throw Error(Errc::UnknownLabel, "zero/one outside the carrier");

    std::vector<Element> sum(n * n, kUndefined);
    auto at = [&](Element a, Element b) -> Element& { return sum[std::size_t(a) * n + b]; };
    for (const auto& t : triples) {
        if (t.a >= n || t.b >= n || t.c >= n) throw Error(Errc::UnknownLabel, "triple outside the carrier");
        Element& slot = at(t.a, t.b);
        if (slot != kUndefined && slot != t.c) {
            add(Axiom::Table, {t.a, t.b, slot, t.c}, "two results for one sum");
            continue;
        }
        slot = t.c;
    }

    // (i) in both directions over all triples
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = at(a, b);
            for (Element c = 0; c < n; ++c) {
                const Element left = ab == kUndefined ? kUndefined : at(ab, c);
                const Element bc = at(b, c);
                const Element right = bc == kUndefined ? kUndefined : at(a, bc);
                if ((left == kUndefined) != (right == kUndefined))
                    add(Axiom::Associativity, {a, b, c}, left == kUndefined ? "only a+(b+c) exists"
                                                                           : "only (a+b)+c exists");
                else if (left != right)
                    add(Axiom::Associativity, {a, b, c}, "(a+b)+c != a+(b+c)");
            }
        }

    // (ii)
    for (Element a = 0; a < n; ++a) {
        std::size_t right = 0;
        std::size_t left = 0;
        for (Element x = 0; x < n; ++x) {
            if (at(a, x) == one) ++right;
            if (at(x, a) == one) ++left;
        }
        if (right != 1) add(Axiom::Complement, {a}, std::to_string(right) + " d with a+d=1");
        if (left != 1) add(Axiom::Complement, {a}, std::to_string(left) + " e with e+a=1");
    }

    // (iii)
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element c = at(a, b);
            if (c == kUndefined) continue;
            bool has_d = false;
            bool has_e = false;
            for (Element x = 0; x < n && !(has_d && has_e); ++x) {
                has_d = has_d || at(x, a) == c;
                has_e = has_e || at(b, x) == c;
            }
            if (!has_d) add(Axiom::Commutation, {a, b}, "no d with a+b=d+a");
            if (!has_e) add(Axiom::Commutation, {a, b}, "no e with a+b=b+e");
        }

    // (iv)
    for (Element a = 0; a < n; ++a)
        if (a != zero && (at(one, a) != kUndefined || at(a, one) != kUndefined)) add(Axiom::Unit, {a});

    // order: a <= b via a+c=b must agree with a <= b via d+a=b
    std::vector<ElementSet> right_up(n, ElementSet(n));
    std::vector<ElementSet> left_up(n, ElementSet(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element c = at(a, b);
            if (c == kUndefined) continue;
            right_up[a].set(c);
            left_up[b].set(c);
        }
    for (Element a = 0; a < n; ++a) {
        if (right_up[a] != left_up[a]) {
            for (Element b = 0; b < n; ++b)
                if (right_up[a].test(b) != left_up[a].test(b))
                    add(Axiom::Order, {a, b}, "order characterizations disagree");
        }
        if (!right_up[a].test(a)) add(Axiom::Order, {a}, "not reflexive");
        if (!right_up[zero].test(a)) add(Axiom::Order, {zero, a}, "0 <= a fails");
        if (!right_up[a].test(one)) add(Axiom::Order, {a, one}, "a <= 1 fails");
        for (Element b = 0; b < n; ++b) {
            if (b == a || !right_up[a].test(b)) continue;
            if (right_up[b].test(a)) add(Axiom::Order, {a, b}, "not antisymmetric");
            if (!right_up[b].is_subset_of(right_up[a])) add(Axiom::Order, {a, b}, "not transitive");
        }
    }

    // uniqueness of both differences
    for (Element a = 0; a < n; ++a) {
        std::vector<Element> seen_right(n, kUndefined);
        std::vector<Element> seen_left(n, kUndefined);
        for (Element x = 0; x < n; ++x) {
            if (const Element r = at(a, x); r != kUndefined) {
                if (seen_right[r] != kUndefined) add(Axiom::Cancellation, {a, seen_right[r], x}, "a+c = a+c'");
                else seen_right[r] = x;
            }
            if (const Element l = at(x, a); l != kUndefined) {
                if (seen_left[l] != kUndefined) add(Axiom::Cancellation, {a, seen_left[l], x}, "d+a = d'+a");
                else seen_left[l] = x;
            }
        }
    }
    return report;
}

PseudoEffectAlgebra build_algebra(std::vector<std::string> labels, Element zero, Element one,
                                  std::vector<SumTriple> triples) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(Errc::Parse, "empty carrier");
    if (n > kMaxElements)
        throw Error(Errc::SizeLimitExceeded, std::to_string(n) + " elements > " + std::to_string(kMaxElements));
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels) {
            if (!is_valid_label(l)) throw Error(Errc::Parse, "invalid label '" + l + "'");
            if (!seen.insert(l).second) throw Error(Errc::DuplicateLabel, l);
        }
    }
    std::sort(triples.begin(), triples.end(), [](const SumTriple& x, const SumTriple& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    if (auto report = validate_table(n, zero, one, triples); !report.ok())
        throw ValidationError(std::move(report), std::move(labels));

    PseudoEffectAlgebra e;
    e.labels_ = std::move(labels);
    for (Element i = 0; i < n; ++i) e.by_label_.emplace(e.labels_[i], i);
    e.zero_ = zero;
    e.one_ = one;
    e.sum_.assign(n * n, kUndefined);
    e.ldiff_.assign(n * n, kUndefined);
    e.rdiff_.assign(n * n, kUndefined);
    e.down_.assign(n, ElementSet(n));
    e.up_.assign(n, ElementSet(n));
    for (const auto& t : triples) {
        e.sum_[e.index(t.a, t.b)] = t.c;
        e.rdiff_[e.index(t.a, t.c)] = t.b;
        e.ldiff_[e.index(t.c, t.b)] = t.a;
        e.down_[t.c].set(t.a);
        e.up_[t.a].set(t.c);
    }
    e.triples_ = std::move(triples);
    for (const auto& t : e.triples_)
        if (e.sum(t.b, t.a) != t.c) {
            e.commutative_ = false;
            break;
        }

    e.by_value_ = e.triples_;
    std::stable_sort(e.by_value_.begin(), e.by_value_.end(),
                     [](const SumTriple& x, const SumTriple& y) { return x.c < y.c; });
    e.by_value_start_.assign(n + 1, 0);
    for (const auto& t : e.by_value_) ++e.by_value_start_[t.c + 1];
    for (std::size_t i = 0; i < n; ++i) e.by_value_start_[i + 1] += e.by_value_start_[i];

    e.hash_ = sha256_hex(export_algebra(e));
    return e;
}

PseudoEffectAlgebra build_algebra(std::vector<std::string> labels, std::string_view zero,
                                  std::string_view one, std::span<const LabeledTriple> triples) {
    std::unordered_map<std::string, Element> index;
    for (Element i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], i).second) throw Error(Errc::DuplicateLabel, labels[i]);
    auto lookup = [&](std::string_view l) {
        auto it = index.find(std::string(l));
        if (it == index.end()) throw Error(Errc::UnknownLabel, std::string(l));
        return it->second;
    };
    std::vector<SumTriple> resolved;
    resolved.reserve(triples.size());
    for (const auto& t : triples) resolved.push_back({lookup(t.a), lookup(t.b), lookup(t.c)});
    const Element z = lookup(zero);
    const Element o = lookup(one);
    return build_algebra(std::move(labels), z, o, std::move(resolved));
}

std::optional<Element> PseudoEffectAlgebra::find(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

Element PseudoEffectAlgebra::at(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw Error(Errc::UnknownLabel, std::string(label));
}

std::span<const SumTriple> PseudoEffectAlgebra::decompositions(Element c) const noexcept {
    const auto* base = by_value_.data();
    return {base + by_value_start_[c], base + by_value_start_[c + 1]};
}

std::optional<Element> poset_meet(const PseudoEffectAlgebra& e, Element a, Element b) {
    const ElementSet lower = e.down_set(a) & e.down_set(b);
    for (auto x = lower.find_first(); x != ElementSet::npos; x = lower.find_next(x))
        if (lower.is_subset_of(e.down_set(Element(x)))) return Element(x);
    return std::nullopt;
}

std::optional<Element> poset_join(const PseudoEffectAlgebra& e, Element a, Element b) {
    const ElementSet upper = e.up_set(a) & e.up_set(b);
    for (auto x = upper.find_first(); x != ElementSet::npos; x = upper.find_next(x))
        if (upper.is_subset_of(e.up_set(Element(x)))) return Element(x);
    return std::nullopt;
}

std::vector<Element> members(const ElementSet& set) {
    std::vector<Element> out;
    out.reserve(set.count());
    for (auto x = set.find_first(); x != ElementSet::npos; x = set.find_next(x)) out.push_back(Element(x));
    return out;
}

ElementSet make_set(const PseudoEffectAlgebra& e, std::span<const Element> elements) {
    ElementSet out(e.size());
    for (Element x : elements) out.set(x);
    return out;
}

}  // namespace pea
