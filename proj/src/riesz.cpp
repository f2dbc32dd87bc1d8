#include <pea/riesz.hpp>

#include <stdexcept>

namespace pea {

const char* property_name(Property property) noexcept {
    switch (property) {
        case Property::Com: return "COM";
        case Property::Rip: return "RIP";
        case Property::Rdp0: return "RDP0";
        case Property::Rdp: return "RDP";
        case Property::Rdp1: return "RDP1";
        case Property::Rdp2: return "RDP2";
    }
    return "?";
}

namespace {

std::optional<std::array<Element, 2>> first_noncommuting(const PseudoEffectAlgebra& algebra, Element a,
                                                         Element b) {
    const auto& da = algebra.down_set(a);
    const auto& db = algebra.down_set(b);
    for (auto x = da.find_first(); x != ElementSet::npos; x = da.find_next(x))
        for (auto y = db.find_first(); y != ElementSet::npos; y = db.find_next(y))
            if (algebra.sum(Element(x), Element(y)) != algebra.sum(Element(y), Element(x)))
                return std::array<Element, 2>{Element(x), Element(y)};
    return std::nullopt;
}

bool no_common_nonzero_lower_bound(const PseudoEffectAlgebra& algebra, Element x, Element y) {
    ElementSet common = algebra.down_set(x) & algebra.down_set(y);
    common.reset(algebra.zero());
    return common.none();
}

PropertyVerdict check_refinements(const PseudoEffectAlgebra& algebra, Property property) {
    PropertyVerdict v{property};
    for (Element c = 0; c < algebra.size(); ++c) {
        const auto decs = algebra.decompositions(c);
        for (const auto& p : decs)
            for (const auto& q : decs) {
                ++v.instances;
                if (find_refinement(algebra, property, p.a, p.b, q.a, q.b)) continue;
                v.holds = false;
                v.witness = {p.a, p.b, q.a, q.b};
                return v;
            }
    }
    return v;
}

}  // namespace

bool commute(const PseudoEffectAlgebra& algebra, Element a, Element b) {
    return !first_noncommuting(algebra, a, b);
}

PropertyVerdict check_com(const PseudoEffectAlgebra& algebra, Element a, Element b) {
    PropertyVerdict v{Property::Com};
    v.instances = algebra.down_set(a).count() * algebra.down_set(b).count();
    if (auto w = first_noncommuting(algebra, a, b)) {
        v.holds = false;
        v.witness = {(*w)[0], (*w)[1]};
    }
    return v;
}

PropertyVerdict check_com_all(const PseudoEffectAlgebra& algebra) {
    return check_com(algebra, algebra.one(), algebra.one());
}

std::optional<Element> find_interpolant(const PseudoEffectAlgebra& algebra, Element a1, Element a2, Element b1,
                                        Element b2) {
    const ElementSet between = algebra.up_set(a1) & algebra.up_set(a2) & algebra.down_set(b1) & algebra.down_set(b2);
    const auto c = between.find_first();
    if (c == ElementSet::npos) return std::nullopt;
    return Element(c);
}

PropertyVerdict check_rip(const PseudoEffectAlgebra& algebra) {
    PropertyVerdict v{Property::Rip};
    const std::size_t n = algebra.size();
    for (Element a1 = 0; a1 < n; ++a1)
        for (Element a2 = a1; a2 < n; ++a2) {
            const ElementSet upper = algebra.up_set(a1) & algebra.up_set(a2);
            for (auto b1 = upper.find_first(); b1 != ElementSet::npos; b1 = upper.find_next(b1))
                for (auto b2 = b1; b2 != ElementSet::npos; b2 = upper.find_next(b2)) {
                    ++v.instances;
                    if ((upper & algebra.down_set(Element(b1)) & algebra.down_set(Element(b2))).any()) continue;
                    v.holds = false;
                    v.witness = {a1, a2, Element(b1), Element(b2)};
                    return v;
                }
        }
    return v;
}

std::optional<std::array<Element, 2>> find_split(const PseudoEffectAlgebra& algebra, Element a, Element b1,
                                                 Element b2) {
    const auto& d1s = algebra.down_set(b1);
    for (auto d1 = d1s.find_first(); d1 != ElementSet::npos; d1 = d1s.find_next(d1)) {
        if (!algebra.leq(Element(d1), a)) continue;
        const Element d2 = algebra.right_diff(Element(d1), a);
        if (algebra.leq(d2, b2)) return std::array<Element, 2>{Element(d1), d2};
    }
    return std::nullopt;
}

PropertyVerdict check_rdp0(const PseudoEffectAlgebra& algebra) {
    PropertyVerdict v{Property::Rdp0};
    for (const auto& t : algebra.sums()) {
        const auto& below = algebra.down_set(t.c);
        for (auto a = below.find_first(); a != ElementSet::npos; a = below.find_next(a)) {
            ++v.instances;
            if (find_split(algebra, Element(a), t.a, t.b)) continue;
            v.holds = false;
            v.witness = {Element(a), t.a, t.b};
            return v;
        }
    }
    return v;
}

std::optional<std::array<Element, 4>> find_refinement(const PseudoEffectAlgebra& algebra, Property property,
                                                      Element a1, Element a2, Element b1, Element b2) {
    if (property != Property::Rdp && property != Property::Rdp1 && property != Property::Rdp2)
        throw std::invalid_argument("find_refinement: not a refinement property");
    const ElementSet candidates = algebra.down_set(a1) & algebra.down_set(b1);
    for (auto x = candidates.find_first(); x != ElementSet::npos; x = candidates.find_next(x)) {
        // d1 fixes the rest by cancellation
        const Element d1 = Element(x);
        const Element d2 = algebra.right_diff(d1, a1);
        const Element d3 = algebra.right_diff(d1, b1);
        if (!algebra.leq(d3, a2)) continue;
        const Element d4 = algebra.right_diff(d3, a2);
        if (algebra.sum(d2, d4) != b2) continue;
        if (property == Property::Rdp1 && !commute(algebra, d2, d3)) continue;
        if (property == Property::Rdp2 && !no_common_nonzero_lower_bound(algebra, d2, d3)) continue;
        return std::array<Element, 4>{d1, d2, d3, d4};
    }
    return std::nullopt;
}

PropertyVerdict check_rdp(const PseudoEffectAlgebra& algebra) { return check_refinements(algebra, Property::Rdp); }
PropertyVerdict check_rdp1(const PseudoEffectAlgebra& algebra) { return check_refinements(algebra, Property::Rdp1); }
PropertyVerdict check_rdp2(const PseudoEffectAlgebra& algebra) { return check_refinements(algebra, Property::Rdp2); }

std::vector<PropertyVerdict> rdp_profile(const PseudoEffectAlgebra& algebra) {
    std::vector<PropertyVerdict> out{check_com_all(algebra), check_rip(algebra),  check_rdp0(algebra),
                                     check_rdp(algebra),     check_rdp1(algebra), check_rdp2(algebra)};
    for (std::size_t i = 2; i < out.size(); ++i)
        if (out[i].holds && !out[i - 1].holds)
            internal_error(std::string(property_name(out[i].property)) + " holds but " +
                           property_name(out[i - 1].property) + " fails");
    if (out[0].holds && out[3].holds != out[4].holds) internal_error("RDP and RDP1 disagree on a commutative table");
    return out;
}

void require_rdp(const PseudoEffectAlgebra& algebra, const std::string& operation) {
    const auto v = check_rdp(algebra);
    if (v.holds) return;
    throw Error(Errc::RDPRequired, operation + " needs RDP", v.witness);
}

}  // namespace pea
