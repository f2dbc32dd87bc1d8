#pragma once

#include <pea/algebra.hpp>
#include <pea/measures.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pea {

/// 0 in I, closed under defined sums, downward closed.
bool is_ideal(const PseudoEffectAlgebra& algebra, const ElementSet& set);
/// a + I == I + a (as sets of defined sums) for every a.
bool is_normal(const PseudoEffectAlgebra& algebra, const ElementSet& set);

struct Ideal {
    ElementSet members;
    bool is_normal = false;
};

/// Least ideal containing X.
Ideal ideal_closure(const PseudoEffectAlgebra& algebra, std::span<const Element> generators);

/// A face of the state polytope, stored as a sorted subset of its extreme
/// states (indices into StatePolytope::extreme_states).
struct Face {
    std::vector<std::size_t> vertices;
    /// Present when the face was built as {s : X subset of Ker(s)}.
    std::optional<std::vector<Element>> defining_kernel;

    bool empty() const noexcept { return vertices.empty(); }
    bool contains(std::size_t vertex) const;
    friend bool operator==(const Face& x, const Face& y) { return x.vertices == y.vertices; }
};

Face whole_face(const StatePolytope& polytope);

/// True iff the convex hull of the given extreme states is a face. Any
/// subset qualifies on a simplex; otherwise checked by LP: no vertex outside
/// the subset may carry weight in a representation of the subset's barycenter.
bool is_face(const StatePolytope& polytope, std::span<const std::size_t> vertices);

/// The face {s : X subset of Ker(s)}, spanned by the extreme states that vanish on X.
Face kernel_face(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                 std::span<const Element> kernel);

/// F' on a simplex: the face spanned by the extreme states outside F.
/// When the lattice meet is available (RDP) the result is cross-checked:
/// every vertex of F' is disjoint from every vertex of F.
/// Throws Error(NotASimplex).
Face complementary_face(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope, const Face& face);

/// (F_1 cap ... cap F_k)' == span(F_1' cup ... cup F_k'), k >= 1.
bool face_intersection_complement_law(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                      std::span<const Face> faces);

struct FaceCertificate {
    /// max t(1) over t in V(F), t <=+ m; equals m_1(1).
    Rational lp_optimum;
    /// The same LP against m_2; 0 certifies that m_2 is V(F)-singular.
    Rational singularity_optimum;
    /// m_1 = sum coefficients[i] * extreme_states[face.vertices[i]].
    RationalVector coefficients;
    std::size_t pivots = 0;
    std::string uniqueness;
};

struct FaceDecomposition {
    Measure in_face;   // m_1 in V(F)
    Measure singular;  // m_2 in V(F')
    FaceCertificate certificate;
};

/// Splits m = m_1 + m_2 with m_1 the largest element of V(F) below m.
///
/// m_1 = sum lambda_i s_i over the vertices s_i of F solves
///     maximize sum lambda_i  s.t.  sum lambda_i s_i(x) <= m(x) for all x, lambda >= 0.
/// `constraint_order` permutes the LP rows (all elements when empty); the
/// result does not depend on it. Throws Error(NotASimplex).
FaceDecomposition face_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                 const Face& face, const Measure& m,
                                 std::span<const Element> constraint_order = {});

struct ConvexStateDecomposition {
    Rational lambda1;
    Rational lambda2;
    std::optional<State> s1;  // in F, present iff lambda1 > 0
    std::optional<State> s2;  // in F', present iff lambda2 > 0
};

ConvexStateDecomposition convex_state_decompose(const PseudoEffectAlgebra& algebra,
                                                const StatePolytope& polytope, const Face& face,
                                                const State& s);

}  // namespace pea
