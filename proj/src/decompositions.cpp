#include <pea/decompositions.hpp>
#include <pea/jordan.hpp>
#include <pea/riesz.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace pea {

const char* continuity_name(Continuity relation) noexcept {
    switch (relation) {
        case Continuity::Absolute: return "<<";
        case Continuity::Epsilon: return "<<_eps";
        case Continuity::Orthogonal: return "_|_";
        case Continuity::Central: return "<<_C";
    }
    return "?";
}

const char* mode_name(YosidaHewittMode mode) noexcept {
    switch (mode) {
        case YosidaHewittMode::CompletelyAdditive: return "ca";
        case YosidaHewittMode::Sigma: return "sigma";
        case YosidaHewittMode::UpwardsContinuous: return "uc";
    }
    return "?";
}

namespace {

void same_algebra(const PseudoEffectAlgebra& algebra, const SignedMeasure& x, const SignedMeasure& y) {
    if (x.algebra_hash() != algebra.hash() || y.algebra_hash() != algebra.hash())
        throw Error(Errc::AlgebraMismatch, "measures must live on the given algebra");
}

std::size_t saturating_add(std::size_t x, std::size_t y) {
    return x > std::numeric_limits<std::size_t>::max() - y ? std::numeric_limits<std::size_t>::max() : x + y;
}

}  // namespace

ContinuityVerdict check_abs_continuous(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2) {
    same_algebra(algebra, m1, m2);
    ContinuityVerdict v{Continuity::Absolute, true};
    for (Element a = 0; a < algebra.size(); ++a)
        if (m2[a] == 0 && m1[a] != 0) {
            v.holds = false;
            v.witness = a;
            break;
        }
    return v;
}

ContinuityVerdict check_eps_continuous(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2) {
    same_algebra(algebra, m1, m2);
    ContinuityVerdict v{Continuity::Epsilon, true};
    RationalVector thresholds;
    for (const auto& x : m1.values())
        if (x > 0) thresholds.push_back(x);
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    for (const auto& eps : thresholds) {
        std::optional<Element> argmin;
        for (Element a = 0; a < algebra.size(); ++a)
            if (m1[a] >= eps && (!argmin || m2[a] < m2[*argmin])) argmin = a;
        const Rational& delta = m2[*argmin];
        v.eps_delta.push_back({eps, delta});
        if (delta == 0 && v.holds) {
            v.holds = false;
            v.witness = *argmin;
        }
    }
    return v;
}

ContinuityVerdict check_orthogonal(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2) {
    same_algebra(algebra, m1, m2);
    ContinuityVerdict v{Continuity::Orthogonal, false};
    for (Element a = 0; a < algebra.size(); ++a)
        if (m2[a] == 0 && m1[algebra.left_complement(a)] == 0) {
            v.holds = true;
            v.witness = a;
            break;
        }
    return v;
}

ContinuityVerdict check_central_continuous(const PseudoEffectAlgebra& algebra, const ElementSet& center,
                                           const Measure& m1, const Measure& m2) {
    same_algebra(algebra, m1, m2);
    ContinuityVerdict v{Continuity::Central, true};
    for (auto a = center.find_first(); a != ElementSet::npos; a = center.find_next(a))
        if (m2[Element(a)] == 0 && m1[Element(a)] != 0) {
            v.holds = false;
            v.witness = Element(a);
            break;
        }
    return v;
}

bool check_eps_equiv_abs(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2) {
    return check_abs_continuous(algebra, m1, m2).holds == check_eps_continuous(algebra, m1, m2).holds;
}

LebesgueDecomposition lebesgue_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                         const Measure& m, const Measure& t,
                                         std::span<const Element> constraint_order) {
    same_algebra(algebra, m, t);
    const auto null_set = members(kernel(algebra, t).members);
    Face face = kernel_face(algebra, polytope, null_set);
    auto parts = face_decompose(algebra, polytope, face, m, constraint_order);
    auto continuity = check_abs_continuous(algebra, parts.in_face, t);
    if (!continuity.holds) internal_error("component in the kernel face is not absolutely continuous");
    return {std::move(parts.in_face), std::move(parts.singular), std::move(face), std::move(parts.certificate),
            std::move(continuity), std::nullopt};
}

LebesgueDecomposition eps_lebesgue_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                             const Measure& m, const Measure& t,
                                             std::span<const Element> constraint_order) {
    same_algebra(algebra, m, t);
    Face face;
    for (std::size_t i = 0; i < polytope.extreme_states.size(); ++i)
        if (check_eps_continuous(algebra, polytope.extreme_states[i], t).holds) face.vertices.push_back(i);
    auto parts = face_decompose(algebra, polytope, face, m, constraint_order);
    auto continuity = check_eps_continuous(algebra, parts.in_face, t);
    if (!continuity.holds) internal_error("component in the continuous face is not eps-continuous");
    const bool meet_zero = meet(algebra, parts.singular, t).is_zero();
    return {std::move(parts.in_face), std::move(parts.singular), std::move(face), std::move(parts.certificate),
            std::move(continuity), meet_zero};
}

bool is_central(const PseudoEffectAlgebra& algebra, Element a) {
    const Element minus = algebra.left_complement(a);
    if (minus != algebra.right_complement(a)) return false;
    if (poset_meet(algebra, a, minus) != algebra.zero()) return false;
    for (Element x = 0; x < algebra.size(); ++x) {
        const auto p = poset_meet(algebra, x, a);
        const auto q = poset_meet(algebra, x, minus);
        if (!p || !q || algebra.sum(*p, *q) != x) return false;
    }
    return true;
}

CentralElements center(const PseudoEffectAlgebra& algebra) {
    CentralElements c{algebra.empty_set()};
    for (Element a = 0; a < algebra.size(); ++a)
        if (is_central(algebra, a)) c.members.set(a);
    const auto& set = c.members;
    bool ok = set.test(algebra.zero()) && set.test(algebra.one());
    for (auto a = set.find_first(); ok && a != ElementSet::npos; a = set.find_next(a)) {
        ok = set.test(algebra.left_complement(Element(a)));
        for (auto b = set.find_first(); ok && b != ElementSet::npos; b = set.find_next(b)) {
            const auto lo = poset_meet(algebra, Element(a), Element(b));
            const auto hi = poset_join(algebra, Element(a), Element(b));
            ok = lo && hi && set.test(*lo) && set.test(*hi);
        }
    }
    c.boolean_algebra_check = ok;
    return c;
}

CentralDecomposition central_lebesgue_decompose(const PseudoEffectAlgebra& algebra, const Measure& m,
                                                const Measure& t) {
    same_algebra(algebra, m, t);
    require_rdp(algebra, "central decomposition");
    const CentralElements c = center(algebra);
    if (!c.boolean_algebra_check) internal_error("center of an RDP algebra is not a Boolean subalgebra");

    CentralDecomposition out{Measure::zero(algebra), Measure::zero(algebra), algebra.zero()};
    for (auto a = c.members.find_first(); a != ElementSet::npos; a = c.members.find_next(a))
        if (t[Element(a)] == 0) out.null_central.push_back(Element(a));
    for (Element a : out.null_central) {
        const auto j = poset_join(algebra, out.a0, a);
        if (!j) internal_error("central elements without a join");
        out.a0 = *j;
    }
    if (!c.members.test(out.a0) || t[out.a0] != 0) internal_error("join of t-null central elements is not t-null");
    out.a0_maximal = std::all_of(out.null_central.begin(), out.null_central.end(),
                                 [&](Element a) { return algebra.leq(a, out.a0); });

    const Element a0_minus = algebra.left_complement(out.a0);
    RationalVector v1(algebra.size());
    RationalVector v2(algebra.size());
    for (Element x = 0; x < algebra.size(); ++x) {
        v1[x] = m[*poset_meet(algebra, x, a0_minus)];
        v2[x] = m[*poset_meet(algebra, x, out.a0)];
    }
    try {
        out.continuous = Measure(algebra, std::move(v1));
        out.singular = Measure(algebra, std::move(v2));
    } catch (const Error& e) {
        internal_error(std::string("central restriction is not a measure: ") + e.what());
    }
    if (static_cast<const SignedMeasure&>(out.continuous) + out.singular != m)
        internal_error("central components do not add up to m");

    out.modular_on_center = true;
    for (auto a = c.members.find_first(); a != ElementSet::npos; a = c.members.find_next(a))
        for (auto b = c.members.find_first(); b != ElementSet::npos; b = c.members.find_next(b)) {
            const Element lo = *poset_meet(algebra, Element(a), Element(b));
            const Element hi = *poset_join(algebra, Element(a), Element(b));
            for (const Measure* mu : {&t, &m})
                if ((*mu)[Element(a)] + (*mu)[Element(b)] != (*mu)[lo] + (*mu)[hi]) out.modular_on_center = false;
        }

    out.continuity = check_central_continuous(algebra, c.members, out.continuous, t);
    out.orthogonal = {Continuity::Orthogonal, t[out.a0] == 0 && out.singular[a0_minus] == 0, out.a0, {}};
    return out;
}

AdditivityTrace check_sigma_additive(const PseudoEffectAlgebra& algebra, const Measure& m) {
    AdditivityTrace trace{true, "increasing sequences in a finite poset are eventually constant at their join"};
    for (Element a = 0; a < algebra.size() && trace.holds; ++a) {
        const auto& below = algebra.down_set(a);
        for (auto x = below.find_first(); x != ElementSet::npos; x = below.find_next(x)) {
            ++trace.families;
            if (m[Element(x)] > m[a] || poset_join(algebra, Element(x), a) != a) {
                trace.holds = false;
                trace.witness = a;
                break;
            }
        }
    }
    return trace;
}

AdditivityTrace check_completely_additive(const PseudoEffectAlgebra& algebra, const Measure& m) {
    if (!algebra.is_commutative())
        throw Error(Errc::NotCommutative, "summable systems are defined for effect algebras", check_com_all(algebra).witness);
    AdditivityTrace trace{true, "summable systems have finitely many nonzero terms"};
    const std::size_t n = algebra.size();
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
        return algebra.down_set(x).count() < algebra.down_set(y).count();
    });
    // lo/hi over ordered decompositions of x into nonzero parts
    std::vector<Rational> lo(n);
    std::vector<Rational> hi(n);
    std::vector<std::size_t> count(n, 0);
    for (Element x : order) {
        if (x == algebra.zero()) {
            lo[x] = hi[x] = 0;
            count[x] = 1;
            continue;
        }
        lo[x] = hi[x] = m[x];
        count[x] = 1;
        for (const auto& t : algebra.decompositions(x)) {
            if (t.a == algebra.zero() || t.b == algebra.zero()) continue;
            const Rational low = m[t.a] + lo[t.b];
            const Rational high = m[t.a] + hi[t.b];
            if (low < lo[x]) lo[x] = low;
            if (high > hi[x]) hi[x] = high;
            count[x] = saturating_add(count[x], count[t.b]);
        }
        trace.families = saturating_add(trace.families, count[x]);
        if (trace.holds && (lo[x] != m[x] || hi[x] != m[x])) {
            trace.holds = false;
            trace.witness = x;
        }
    }
    return trace;
}

AdditivityTrace check_upwards_continuous(const PseudoEffectAlgebra& algebra, const Measure& m) {
    AdditivityTrace trace{true, "finite upward directed sets contain their join"};
    for (Element a = 0; a < algebra.size(); ++a) {
        const auto& below = algebra.down_set(a);
        const std::size_t k = below.count() - 1;
        trace.families = saturating_add(trace.families, k >= 63 ? std::numeric_limits<std::size_t>::max()
                                                                : std::size_t(1) << k);
        for (auto x = below.find_first(); x != ElementSet::npos; x = below.find_next(x))
            if (m[Element(x)] > m[a] && trace.holds) {
                trace.holds = false;
                trace.witness = a;
            }
    }
    return trace;
}

namespace {

AdditivityTrace run_mode(const PseudoEffectAlgebra& algebra, const Measure& m, YosidaHewittMode mode) {
    switch (mode) {
        case YosidaHewittMode::CompletelyAdditive: return check_completely_additive(algebra, m);
        case YosidaHewittMode::Sigma: return check_sigma_additive(algebra, m);
        case YosidaHewittMode::UpwardsContinuous: return check_upwards_continuous(algebra, m);
    }
    internal_error("unknown mode");
}

}  // namespace

YosidaHewittDecomposition yosida_hewitt_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                                  const Measure& m, YosidaHewittMode mode) {
    if (m.algebra_hash() != algebra.hash()) throw Error(Errc::AlgebraMismatch, "measure of another algebra");
    auto measure_trace = run_mode(algebra, m, mode);
    Face face;
    std::vector<AdditivityTrace> traces;
    for (std::size_t i = 0; i < polytope.extreme_states.size(); ++i) {
        traces.push_back(run_mode(algebra, polytope.extreme_states[i], mode));
        if (traces.back().holds) face.vertices.push_back(i);
    }
    auto parts = face_decompose(algebra, polytope, face, m);
    if (!parts.singular.is_zero()) internal_error("nonzero purely finitely additive part on a finite algebra");
    return {std::move(parts.in_face), std::move(parts.singular), std::move(face), std::move(parts.certificate),
            std::move(traces), std::move(measure_trace)};
}

JauchPironVerdict check_jauch_piron(const PseudoEffectAlgebra& algebra, const Measure& t) {
    if (t.algebra_hash() != algebra.hash()) throw Error(Errc::AlgebraMismatch, "measure of another algebra");
    JauchPironVerdict v;
    const ElementSet null_set = kernel(algebra, t).members;
    for (auto a = null_set.find_first(); a != ElementSet::npos; a = null_set.find_next(a))
        for (auto b = a; b != ElementSet::npos; b = null_set.find_next(b))
            if ((algebra.up_set(Element(a)) & algebra.up_set(Element(b)) & null_set).none()) {
                v.holds = false;
                v.witness = std::pair{Element(a), Element(b)};
                return v;
            }
    return v;
}

}  // namespace pea
