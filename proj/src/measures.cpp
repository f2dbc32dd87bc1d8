#include <pea/measures.hpp>
#include <pea/faces.hpp>
#include <pea/polytope.hpp>

#include <algorithm>

namespace pea {

std::vector<AdditivityViolation> additivity_violations(const PseudoEffectAlgebra& algebra,
                                                       const RationalVector& values) {
    std::vector<AdditivityViolation> out;
    for (const auto& t : algebra.sums()) {
        Rational rhs = values[t.a] + values[t.b];
        if (values[t.c] != rhs) out.push_back({t.a, t.b, t.c, values[t.c], std::move(rhs)});
    }
    return out;
}

SignedMeasure::SignedMeasure(const PseudoEffectAlgebra& algebra, RationalVector values)
    : hash_(algebra.hash()), values_(std::move(values)) {
    if (values_.size() != algebra.size())
        throw Error(Errc::AlgebraMismatch, std::to_string(values_.size()) + " values for " +
                                               std::to_string(algebra.size()) + " elements");
    for (const auto& t : algebra.sums()) {
        if (values_[t.c] == values_[t.a] + values_[t.b]) continue;
        throw Error(Errc::AdditivityViolation,
                    "m(" + algebra.label(t.c) + ") = " + to_string(values_[t.c]) + " but m(" +
                        algebra.label(t.a) + ") + m(" + algebra.label(t.b) + ") = " +
                        to_string(Rational(values_[t.a] + values_[t.b])),
                    {t.a, t.b, t.c});
    }
}

SignedMeasure SignedMeasure::zero(const PseudoEffectAlgebra& algebra) {
    return SignedMeasure(algebra.hash(), RationalVector(algebra.size(), Rational(0)));
}

bool SignedMeasure::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& x) { return x == 0; });
}

bool SignedMeasure::is_nonnegative() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& x) { return x >= 0; });
}

void SignedMeasure::require_same_algebra(const SignedMeasure& other) const {
    if (hash_ != other.hash_ || values_.size() != other.values_.size())
        throw Error(Errc::AlgebraMismatch, "measures live on different algebras");
}

bool SignedMeasure::leq(const SignedMeasure& other) const {
    require_same_algebra(other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] > other.values_[i]) return false;
    return true;
}

SignedMeasure operator+(const SignedMeasure& x, const SignedMeasure& y) {
    x.require_same_algebra(y);
    RationalVector v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.values_[i] + y.values_[i];
    return SignedMeasure(x.hash_, std::move(v));
}

SignedMeasure operator-(const SignedMeasure& x, const SignedMeasure& y) {
    x.require_same_algebra(y);
    RationalVector v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.values_[i] - y.values_[i];
    return SignedMeasure(x.hash_, std::move(v));
}

SignedMeasure operator-(const SignedMeasure& x) {
    RationalVector v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -x.values_[i];
    return SignedMeasure(x.hash_, std::move(v));
}

SignedMeasure operator*(const Rational& k, const SignedMeasure& x) {
    RationalVector v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = k * x.values_[i];
    return SignedMeasure(x.hash_, std::move(v));
}

Measure::Measure(const PseudoEffectAlgebra& algebra, RationalVector values)
    : Measure(SignedMeasure(algebra, std::move(values))) {}

Measure::Measure(const SignedMeasure& m) : SignedMeasure(m) {
    for (Element i = 0; i < size(); ++i)
        if ((*this)[i] < 0)
            throw Error(Errc::NotAMeasure, "negative value " + to_string((*this)[i]) + " at element #" +
                                               std::to_string(i), {i});
}

Measure Measure::zero(const PseudoEffectAlgebra& algebra) { return Measure(SignedMeasure::zero(algebra)); }

Measure operator+(const Measure& x, const Measure& y) {
    return Measure(static_cast<const SignedMeasure&>(x) + static_cast<const SignedMeasure&>(y));
}

Measure operator*(const Rational& k, const Measure& x) {
    return Measure(k * static_cast<const SignedMeasure&>(x));
}

State::State(const PseudoEffectAlgebra& algebra, RationalVector values)
    : State(algebra, Measure(algebra, std::move(values))) {}

State::State(const PseudoEffectAlgebra& algebra, const Measure& m) : Measure(m) {
    if (algebra.hash() != algebra_hash()) throw Error(Errc::AlgebraMismatch, "state on a different algebra");
    if ((*this)[algebra.one()] != 1)
        throw Error(Errc::NotAState, "value at the unit is " + to_string((*this)[algebra.one()]));
}

SignedMeasure validate_signed_measure(const PseudoEffectAlgebra& algebra, RationalVector values) {
    return SignedMeasure(algebra, std::move(values));
}

StatePolytope state_space(const PseudoEffectAlgebra& algebra) {
    const std::size_t n = algebra.size();
    StatePolytope out;
    out.algebra_hash = algebra.hash();

    RationalMatrix equalities;
    auto unit_row = [&](Element e, int rhs) {
        RationalVector row(n + 1, Rational(0));
        row[e] = 1;
        row[n] = rhs;
        equalities.push_back(std::move(row));
    };
    unit_row(algebra.zero(), 0);
    unit_row(algebra.one(), 1);
    for (const auto& t : algebra.sums()) {
        RationalVector row(n + 1, Rational(0));
        row[t.c] += 1;
        row[t.a] -= 1;
        row[t.b] -= 1;
        equalities.push_back(std::move(row));
    }
    auto solution = solve_affine(equalities, n);
    if (!solution) return out;
    out.equalities_consistent = true;
    out.parametrization = std::move(*solution);
    const AffineSolution& p = out.parametrization;

    // x_e >= 0 in the free coordinates
    RationalMatrix rows(n, RationalVector(p.dimension()));
    for (std::size_t e = 0; e < n; ++e)
        for (std::size_t k = 0; k < p.dimension(); ++k) rows[e][k] = p.directions[k][e];
    auto vertices = polytope_vertices(rows, p.offset, p.dimension());

    std::vector<RationalVector> points;
    for (const auto& y : vertices) points.push_back(p.evaluate(y));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (auto& x : points) out.extreme_states.emplace_back(algebra, std::move(x));
    std::vector<RationalVector> values;
    for (const auto& s : out.extreme_states) values.push_back(s.values());
    out.affine_dim = affine_dimension(values);
    return out;
}

int affine_dimension(const std::vector<RationalVector>& points) {
    if (points.empty()) return -1;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(rank(std::move(diffs)));
}

bool is_simplex(const StatePolytope& polytope) {
    return polytope.affine_dim + 1 == static_cast<int>(polytope.extreme_states.size());
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    // rejection sampling keeps the result exactly uniform
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

Measure sample_measure(const PseudoEffectAlgebra& algebra, const StatePolytope& polytope,
                       std::uint64_t seed, unsigned scale_bound) {
    if (polytope.empty()) throw Error(Errc::EmptyStateSpace, "no states to combine");
    if (polytope.algebra_hash != algebra.hash()) throw Error(Errc::AlgebraMismatch, "polytope of another algebra");
    Rng rng(seed);
    Measure m = Measure::zero(algebra);
    for (const auto& s : polytope.extreme_states) {
        const std::uint64_t den = 1 + uniform_below(rng, 6);
        const std::uint64_t num = uniform_below(rng, scale_bound * den + 1);
        m = m + make_rational(static_cast<long>(num), static_cast<long>(den)) * s;
    }
    return m;
}

RationalVector barycentric_coordinates(const StatePolytope& polytope, const SignedMeasure& m) {
    if (!is_simplex(polytope)) throw Error(Errc::NotASimplex, "coordinates need affinely independent vertices");
    const std::size_t k = polytope.extreme_states.size();
    if (k == 0) {
        if (m.is_zero()) return {};
        throw Error(Errc::NotAMeasure, "empty state space carries only the zero measure");
    }
    RationalMatrix rows;
    for (std::size_t x = 0; x < m.size(); ++x) {
        RationalVector row(k + 1);
        for (std::size_t i = 0; i < k; ++i) row[i] = polytope.extreme_states[i][Element(x)];
        row[k] = m[Element(x)];
        rows.push_back(std::move(row));
    }
    auto sol = solve_affine(rows, k);
    if (!sol) throw Error(Errc::NotAMeasure, "not in the span of the extreme states");
    if (sol->dimension() != 0) internal_error("extreme states of a simplex are linearly dependent");
    for (const auto& mu : sol->offset)
        if (mu < 0) throw Error(Errc::NotAMeasure, "negative coefficient on an extreme state");
    return sol->offset;
}

KernelInfo kernel(const PseudoEffectAlgebra& algebra, const SignedMeasure& m) {
    KernelInfo info;
    info.members = algebra.empty_set();
    for (Element x = 0; x < algebra.size(); ++x)
        if (m[x] == 0) info.members.set(x);
    info.is_ideal = is_ideal(algebra, info.members);
    info.is_normal = is_normal(algebra, info.members);
    return info;
}

}  // namespace pea
