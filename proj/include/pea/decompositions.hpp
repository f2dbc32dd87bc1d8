#pragma once

#include <pea/algebra.hpp>
#include <pea/faces.hpp>
#include <pea/measures.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pea {

enum class Continuity { Absolute, Epsilon, Orthogonal, Central };

const char* continuity_name(Continuity relation) noexcept;

/// delta(eps) for eps in (previous threshold, threshold].
struct EpsDeltaRow {
    Rational epsilon;
    Rational delta;
};

struct ContinuityVerdict {
    Continuity relation;
    bool holds = false;
    /// Absolute / Central: a with m2(a) = 0 < m1(a) when failing.
    /// Epsilon: an element forcing delta = 0 when failing.
    /// Orthogonal: a with m2(a) = 0 = m1(a^-) when holding.
    std::optional<Element> witness;
    /// Epsilon only: one row per distinct positive value of m1.
    std::vector<EpsDeltaRow> eps_delta;
};

/// m1 << m2: m2(a) = 0 implies m1(a) = 0.
ContinuityVerdict check_abs_continuous(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2);
/// m1 <<_eps m2, with delta(eps) = min{ m2(a) : m1(a) >= eps }.
ContinuityVerdict check_eps_continuous(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2);
/// m1 _|_ m2: some a has m2(a) = 0 = m1(a^-).
ContinuityVerdict check_orthogonal(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2);
/// m1 <<_C m2 over the given central elements.
ContinuityVerdict check_central_continuous(const PseudoEffectAlgebra& algebra, const ElementSet& center,
                                           const Measure& m1, const Measure& m2);

/// Absolute and epsilon continuity give the same verdict.
bool check_eps_equiv_abs(const PseudoEffectAlgebra& algebra, const Measure& m1, const Measure& m2);

struct LebesgueDecomposition {
    Measure continuous;  // m1 << t
    Measure singular;    // m2, dominates no nonzero measure << t
    Face face;
    FaceCertificate engine;
    ContinuityVerdict continuity;
    /// Epsilon variant only: m2 ^ t == 0.
    std::optional<bool> singular_meet_zero;
};

/// m = m1 + m2 along the face {s : Ker(t) subset of Ker(s)}.
LebesgueDecomposition lebesgue_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                         const Measure& m, const Measure& t,
                                         std::span<const Element> constraint_order = {});
/// Same split with the face taken as {s : s <<_eps t}; additionally checks
/// m2 ^ t = 0 through the lattice meet and records the delta table.
LebesgueDecomposition eps_lebesgue_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                             const Measure& m, const Measure& t,
                                             std::span<const Element> constraint_order = {});

struct CentralElements {
    ElementSet members;
    /// 0, 1 present, closed under complement, pairwise meets and joins exist in the set.
    bool boolean_algebra_check = false;
};

/// a is central iff a ^ a^- = 0, a^- = a^~, and for every x both x ^ a and
/// x ^ a^- exist with x = (x ^ a) + (x ^ a^-).
bool is_central(const PseudoEffectAlgebra& algebra, Element a);
CentralElements center(const PseudoEffectAlgebra& algebra);

struct CentralDecomposition {
    Measure continuous;  // m1(x) = m(x ^ a0^-)
    Measure singular;    // m2(x) = m(x ^ a0)
    Element a0;
    /// Members of C(E) with t(a) = 0.
    std::vector<Element> null_central;
    /// Every t-null central element lies below a0.
    bool a0_maximal = false;
    /// t(a) + t(b) = t(a ^ b) + t(a v b) on all central pairs, for t and m.
    bool modular_on_center = false;
    ContinuityVerdict continuity;  // m1 <<_C t
    ContinuityVerdict orthogonal;  // m2 _|_ t, witness a0
};

/// Throws Error(RDPRequired) if E lacks RDP.
CentralDecomposition central_lebesgue_decompose(const PseudoEffectAlgebra& algebra, const Measure& m,
                                                const Measure& t);

/// The continuity notions reduce on a finite algebra to finitely many
/// families; the trace says which and how many were checked.
struct AdditivityTrace {
    bool holds = false;
    std::string reduction;
    std::size_t families = 0;  // saturates at SIZE_MAX
    std::optional<Element> witness;
};

/// Increasing sequences are eventually constant, so a_n -> a means a is the
/// last term: checks m(x) <= m(a) for x <= a and that the join of any such
/// pair is a.
AdditivityTrace check_sigma_additive(const PseudoEffectAlgebra& algebra, const Measure& m);
/// Summable systems have finitely many nonzero terms: checks that every
/// ordered decomposition of x into nonzero parts sums to m(x).
/// Throws Error(NotCommutative) on a noncommutative table.
AdditivityTrace check_completely_additive(const PseudoEffectAlgebra& algebra, const Measure& m);
/// Finite upward directed sets have a top: checks sup over any directed
/// subset of down(a) containing a equals m(a).
AdditivityTrace check_upwards_continuous(const PseudoEffectAlgebra& algebra, const Measure& m);

enum class YosidaHewittMode { CompletelyAdditive, Sigma, UpwardsContinuous };

const char* mode_name(YosidaHewittMode mode) noexcept;

struct YosidaHewittDecomposition {
    Measure regular;     // m1 in the mode's face
    Measure singular;    // m2, purely finitely additive part
    Face face;
    FaceCertificate engine;
    std::vector<AdditivityTrace> state_traces;  // one per extreme state
    AdditivityTrace measure_trace;
};

/// Face of states passing the mode's check, then the face engine. On a
/// finite algebra the face is the whole state space and m2 = 0.
YosidaHewittDecomposition yosida_hewitt_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                                  const Measure& m, YosidaHewittMode mode);

struct JauchPironVerdict {
    bool holds = true;
    /// (a, b) with t(a) = t(b) = 0 and no common upper bound c with t(c) = 0.
    std::optional<std::pair<Element, Element>> witness;
    std::string reading = "t(c) = 0";
};

JauchPironVerdict check_jauch_piron(const PseudoEffectAlgebra& algebra, const Measure& t);

}  // namespace pea
