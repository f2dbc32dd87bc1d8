#pragma once

#include <pea/algebra.hpp>
#include <pea/linalg.hpp>
#include <pea/rational.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pea {

/// A failed additivity instance: m(c) != m(a) + m(b) for the defined a + b = c.
struct AdditivityViolation {
    Element a;
    Element b;
    Element c;
    Rational lhs;  // m(c)
    Rational rhs;  // m(a) + m(b)
};

std::vector<AdditivityViolation> additivity_violations(const PseudoEffectAlgebra& algebra,
                                                       const RationalVector& values);

/// Additive rational function on a specific algebra (identified by hash).
///
/// Can only be created through validation against the algebra or by the
/// linear operations below, so additivity is a class invariant.
class SignedMeasure {
public:
    /// Throws Error(AdditivityViolation) with the first failing triple as
    /// witness, or Error(AlgebraMismatch) if the value count is wrong.
    SignedMeasure(const PseudoEffectAlgebra& algebra, RationalVector values);

    static SignedMeasure zero(const PseudoEffectAlgebra& algebra);

    const Rational& operator[](Element e) const { return values_[e]; }
    const RationalVector& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::string& algebra_hash() const noexcept { return hash_; }
    bool is_zero() const;
    bool is_nonnegative() const;

    /// Pointwise order <=+.
    bool leq(const SignedMeasure& other) const;

    friend SignedMeasure operator+(const SignedMeasure& x, const SignedMeasure& y);
    friend SignedMeasure operator-(const SignedMeasure& x, const SignedMeasure& y);
    friend SignedMeasure operator-(const SignedMeasure& x);
    friend SignedMeasure operator*(const Rational& k, const SignedMeasure& x);
    friend bool operator==(const SignedMeasure& x, const SignedMeasure& y) {
        return x.hash_ == y.hash_ && x.values_ == y.values_;
    }

protected:
    SignedMeasure(std::string hash, RationalVector values) : hash_(std::move(hash)), values_(std::move(values)) {}
    void require_same_algebra(const SignedMeasure& other) const;

private:
    std::string hash_;
    RationalVector values_;
};

/// Nonnegative signed measure.
class Measure : public SignedMeasure {
public:
    Measure(const PseudoEffectAlgebra& algebra, RationalVector values);
    /// Throws Error(NotAMeasure) with the first negative element as witness.
    explicit Measure(const SignedMeasure& m);

    static Measure zero(const PseudoEffectAlgebra& algebra);

    friend Measure operator+(const Measure& x, const Measure& y);
    /// k must be nonnegative.
    friend Measure operator*(const Rational& k, const Measure& x);
};

/// Measure with value 1 at the unit.
class State : public Measure {
public:
    State(const PseudoEffectAlgebra& algebra, RationalVector values);
    /// Throws Error(NotAState).
    State(const PseudoEffectAlgebra& algebra, const Measure& m);
};

/// Convenience: validate and return as SignedMeasure.
SignedMeasure validate_signed_measure(const PseudoEffectAlgebra& algebra, RationalVector values);

/// The state space as an exact polytope.
///
/// The additivity and normalization equalities are solved once by
/// elimination (one variable per element); the positivity inequalities are
/// then enumerated by double description in the coordinates of the free
/// elements. Extreme states are sorted lexicographically by value vector.
struct StatePolytope {
    std::string algebra_hash;
    /// false when no signed measure takes the value 1 at the unit.
    bool equalities_consistent = false;
    AffineSolution parametrization;
    std::vector<State> extreme_states;
    /// Dimension of the convex hull of the extreme states; -1 when empty.
    int affine_dim = -1;

    bool empty() const noexcept { return extreme_states.empty(); }
};

StatePolytope state_space(const PseudoEffectAlgebra& algebra);

/// True iff the extreme states are affinely independent. Vacuously true
/// for the empty state space.
bool is_simplex(const StatePolytope& polytope);

/// Affine rank of a point set minus one (-1 for no points).
int affine_dimension(const std::vector<RationalVector>& points);

/// Seeded nonnegative rational combination of the extreme states with
/// coefficients in [0, scale_bound] (denominators up to 6). Throws
/// Error(EmptyStateSpace).
Measure sample_measure(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                       std::uint64_t seed, unsigned scale_bound = 2);

/// Coefficients of m in the extreme states of a simplex: the unique
/// mu >= 0 with m = sum mu_i s_i. Throws NotASimplex if the polytope is not
/// a simplex and NotAMeasure if m is outside the cone.
RationalVector barycentric_coordinates(const StatePolytope& polytope, const SignedMeasure& m);

struct KernelInfo {
    ElementSet members;
    bool is_ideal = false;
    bool is_normal = false;
};

/// {x : m(x) = 0} with its ideal and normality flags.
KernelInfo kernel(const PseudoEffectAlgebra& algebra, const SignedMeasure& m);

/// Seeded generator used by every randomized routine. The engine's output
/// sequence is fixed by the standard; uniform_below avoids the
/// implementation-defined distributions so results are portable.
using Rng = std::mt19937_64;
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

}  // namespace pea
