#include <pea/faces.hpp>
#include <pea/jordan.hpp>
#include <pea/lp.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pea {

bool is_ideal(const PseudoEffectAlgebra& algebra, const ElementSet& set) {
    if (!set.test(algebra.zero())) return false;
    for (const auto& t : algebra.sums())
        if (set.test(t.a) && set.test(t.b) && !set.test(t.c)) return false;
    for (auto x = set.find_first(); x != ElementSet::npos; x = set.find_next(x))
        if (!algebra.down_set(Element(x)).is_subset_of(set)) return false;
    return true;
}

bool is_normal(const PseudoEffectAlgebra& algebra, const ElementSet& set) {
    const std::size_t n = algebra.size();
    for (Element a = 0; a < n; ++a) {
        ElementSet left(n);   // a + I
        ElementSet right(n);  // I + a
        for (auto b = set.find_first(); b != ElementSet::npos; b = set.find_next(b)) {
            if (Element s = algebra.sum(a, Element(b)); s != kUndefined) left.set(s);
            if (Element s = algebra.sum(Element(b), a); s != kUndefined) right.set(s);
        }
        if (left != right) return false;
    }
    return true;
}

Ideal ideal_closure(const PseudoEffectAlgebra& algebra, std::span<const Element> generators) {
    ElementSet members = make_set(algebra, generators);
    members.set(algebra.zero());
    for (bool grew = true; grew;) {
        grew = false;
        const ElementSet before = members;
        for (auto x = before.find_first(); x != ElementSet::npos; x = before.find_next(x))
            members |= algebra.down_set(Element(x));
        for (const auto& t : algebra.sums())
            if (members.test(t.a) && members.test(t.b)) members.set(t.c);
        grew = members != before;
    }
    Ideal out{members, is_normal(algebra, members)};
    return out;
}

bool Face::contains(std::size_t vertex) const {
    return std::binary_search(vertices.begin(), vertices.end(), vertex);
}

Face whole_face(const StatePolytope& polytope) {
    Face f;
    f.vertices.resize(polytope.extreme_states.size());
    std::iota(f.vertices.begin(), f.vertices.end(), std::size_t{0});
    return f;
}

bool is_face(const StatePolytope& polytope, std::span<const std::size_t> vertices) {
    const std::size_t k = polytope.extreme_states.size();
    std::vector<bool> in(k, false);
    for (auto v : vertices) {
        if (v >= k) return false;
        in[v] = true;
    }
    if (vertices.empty() || is_simplex(polytope)) return true;

    const std::size_t n = polytope.extreme_states.front().size();
    RationalVector barycenter(n, Rational(0));
    for (auto v : vertices)
        for (std::size_t x = 0; x < n; ++x) barycenter[x] += polytope.extreme_states[v][Element(x)];
    const Rational count(static_cast<long>(vertices.size()));
    for (auto& b : barycenter) b /= count;

    for (std::size_t outside = 0; outside < k; ++outside) {
        if (in[outside]) continue;
        lp::Program prog;
        prog.objective.assign(k, Rational(0));
        prog.objective[outside] = 1;
        for (std::size_t x = 0; x < n; ++x) {
            lp::Constraint c{RationalVector(k), lp::Relation::Equal, barycenter[x]};
            for (std::size_t j = 0; j < k; ++j) c.coefficients[j] = polytope.extreme_states[j][Element(x)];
            prog.constraints.push_back(std::move(c));
        }
        prog.constraints.push_back({RationalVector(k, Rational(1)), lp::Relation::Equal, Rational(1)});
        const auto res = lp::maximize(prog);
        if (res.status != lp::Status::Optimal) internal_error("barycenter not representable by its own vertices");
        if (res.optimum > 0) return false;
    }
    return true;
}

Face kernel_face(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                 std::span<const Element> kernel) {
    if (polytope.algebra_hash != algebra.hash()) throw Error(Errc::AlgebraMismatch, "polytope of another algebra");
    Face f;
    for (std::size_t i = 0; i < polytope.extreme_states.size(); ++i) {
        const State& s = polytope.extreme_states[i];
        if (std::all_of(kernel.begin(), kernel.end(), [&](Element x) { return s[x] == 0; })) f.vertices.push_back(i);
    }
    std::vector<Element> x(kernel.begin(), kernel.end());
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    f.defining_kernel = std::move(x);
    return f;
}

namespace {

void require_simplex(const StatePolytope& polytope) {
    if (!is_simplex(polytope))
        throw Error(Errc::NotASimplex, std::to_string(polytope.extreme_states.size()) +
                                           " extreme states in affine dimension " +
                                           std::to_string(polytope.affine_dim));
}

std::vector<std::size_t> complement_of(const StatePolytope& polytope, const Face& face) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < polytope.extreme_states.size(); ++i)
        if (!face.contains(i)) out.push_back(i);
    return out;
}

}  // namespace

Face complementary_face(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope, const Face& face) {
    require_simplex(polytope);
    Face out;
    out.vertices = complement_of(polytope, face);

    // s' ^ s = 0 across the two faces, and no vertex of F is disjoint from itself
    try {
        const auto& states = polytope.extreme_states;
        for (auto i : out.vertices)
            for (auto j : face.vertices)
                if (!is_disjoint(algebra, states[i], states[j]))
                    internal_error("complementary vertex not disjoint from the face");
        for (auto j : face.vertices)
            if (is_disjoint(algebra, states[j], states[j])) internal_error("state disjoint from itself");
    } catch (const Error& e) {
        if (e.code() != Errc::NotAdditive) throw;
        // no lattice structure to cross-check against (RDP fails)
    }
    return out;
}

bool face_intersection_complement_law(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                      std::span<const Face> faces) {
    if (faces.empty()) throw std::invalid_argument("face_intersection_complement_law needs at least one face");
    require_simplex(polytope);
    Face intersection = faces.front();
    for (const auto& f : faces.subspan(1)) {
        std::vector<std::size_t> common;
        std::set_intersection(intersection.vertices.begin(), intersection.vertices.end(), f.vertices.begin(),
                              f.vertices.end(), std::back_inserter(common));
        intersection.vertices = std::move(common);
    }
    const Face lhs = complementary_face(algebra, polytope, intersection);
    std::vector<std::size_t> rhs;
    for (const auto& f : faces) {
        const Face c = complementary_face(algebra, polytope, f);
        rhs.insert(rhs.end(), c.vertices.begin(), c.vertices.end());
    }
    std::sort(rhs.begin(), rhs.end());
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
    return lhs.vertices == rhs;
}

namespace {

// max sum(lambda) s.t. sum lambda_i s_i(x) <= m(x), lambda >= 0
lp::Result largest_minorant(const StatePolytope& polytope, const Face& face, const SignedMeasure& m,
                            std::span<const Element> order) {
    const std::size_t k = face.vertices.size();
    lp::Program prog;
    prog.objective.assign(k, Rational(1));
    for (Element x : order) {
        lp::Constraint c{RationalVector(k), lp::Relation::LessEqual, m[x]};
        for (std::size_t i = 0; i < k; ++i) c.coefficients[i] = polytope.extreme_states[face.vertices[i]][x];
        prog.constraints.push_back(std::move(c));
    }
    return lp::maximize(prog);
}

}  // namespace

FaceDecomposition face_decompose(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                                 const Face& face, const Measure& m, std::span<const Element> constraint_order) {
    require_simplex(polytope);
    if (m.algebra_hash() != algebra.hash() || polytope.algebra_hash != algebra.hash())
        throw Error(Errc::AlgebraMismatch, "measure or polytope of another algebra");
    for (auto v : face.vertices)
        if (v >= polytope.extreme_states.size()) throw Error(Errc::AlgebraMismatch, "face vertex out of range");

    std::vector<Element> order(constraint_order.begin(), constraint_order.end());
    if (order.empty()) {
        order.resize(algebra.size());
        std::iota(order.begin(), order.end(), Element{0});
    } else {
        std::vector<Element> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (Element i = 0; i < algebra.size(); ++i)
            if (sorted.size() != algebra.size() || sorted[i] != i)
                throw std::invalid_argument("constraint_order must be a permutation of the elements");
    }

    FaceCertificate cert;
    cert.uniqueness =
        "Gamma(m) = {t in V(F) : t <=+ m} is upward directed, so its maximum is the unique maximizer of t(1)";
    if (face.empty()) {
        cert.lp_optimum = 0;
        cert.singularity_optimum = 0;
        return {Measure::zero(algebra), m, std::move(cert)};
    }

    const auto primary = largest_minorant(polytope, face, m, order);
    if (primary.status != lp::Status::Optimal) throw Error(Errc::LPInfeasible, "t = 0 is always feasible");
    Measure m1 = Measure::zero(algebra);
    for (std::size_t i = 0; i < face.vertices.size(); ++i)
        if (primary.solution[i] != 0) m1 = m1 + primary.solution[i] * polytope.extreme_states[face.vertices[i]];
    if (!m1.leq(m)) internal_error("LP optimum exceeds the measure");
    Measure m2(static_cast<const SignedMeasure&>(m) - m1);

    const auto singular = largest_minorant(polytope, face, m2, order);
    if (singular.status != lp::Status::Optimal) throw Error(Errc::LPInfeasible, "singularity re-check");
    if (singular.optimum != 0) internal_error("remainder still dominates a nonzero element of V(F)");

    cert.lp_optimum = primary.optimum;
    cert.singularity_optimum = singular.optimum;
    cert.coefficients = primary.solution;
    cert.pivots = primary.pivots;
    return {std::move(m1), std::move(m2), std::move(cert)};
}

ConvexStateDecomposition convex_state_decompose(const PseudoEffectAlgebra& algebra,
                                                const StatePolytope& polytope, const Face& face,
                                                const State& s) {
    auto parts = face_decompose(algebra, polytope, face, s);
    ConvexStateDecomposition out;
    out.lambda1 = parts.in_face[algebra.one()];
    out.lambda2 = parts.singular[algebra.one()];
    if (out.lambda1 + out.lambda2 != 1) internal_error("convex weights do not sum to 1");
    if (out.lambda1 > 0) out.s1.emplace(algebra, Measure(Rational(1 / out.lambda1) * parts.in_face));
    if (out.lambda2 > 0) out.s2.emplace(algebra, Measure(Rational(1 / out.lambda2) * parts.singular));
    return out;
}

}  // namespace pea
