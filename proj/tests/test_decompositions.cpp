#include "support.hpp"

#include <pea/decompositions.hpp>
#include <pea/jordan.hpp>
#include <pea/riesz.hpp>

#include <gtest/gtest.h>

using namespace pea;
using namespace pea::testing;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InternalInconsistency;
}

// Classical split of a vector measure: the part of m carried by the atoms where t is positive.
std::pair<Measure, Measure> support_split(const PseudoEffectAlgebra& e, unsigned n, const RationalVector& m_atoms,
                                          const RationalVector& t_atoms) {
    RationalVector on(n), off(n);
    for (unsigned i = 0; i < n; ++i) (t_atoms[i] > 0 ? on : off)[i] = m_atoms[i];
    return {boolean_nonneg(e, on), boolean_nonneg(e, off)};
}

RationalVector random_atoms(Rng& rng, unsigned n, unsigned zero_per_mille) {
    RationalVector v(n);
    for (auto& x : v) x = uniform_below(rng, 1000) < zero_per_mille ? Rational(0) : random_rational(rng, 5, 2);
    return v;
}

}  // namespace

TEST(Continuity, Examples) {
    const auto e = boolean_algebra(2);
    const auto da = boolean_nonneg(e, {q(1), q(0)});
    const auto db = boolean_nonneg(e, {q(0), q(1)});
    EXPECT_TRUE(check_abs_continuous(e, da, da).holds);
    const auto v = check_abs_continuous(e, da, db);
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(db[*v.witness], 0);
    EXPECT_GT(da[*v.witness], 0);

    const auto o = check_orthogonal(e, da, db);
    EXPECT_TRUE(o.holds);
    ASSERT_TRUE(o.witness);
    EXPECT_EQ(db[*o.witness], 0);
    EXPECT_EQ(da[e.left_complement(*o.witness)], 0);
    EXPECT_FALSE(check_orthogonal(e, da, da).holds);

    EXPECT_TRUE(check_eps_equiv_abs(e, da, da));
    EXPECT_TRUE(check_eps_equiv_abs(e, da, db));
    EXPECT_FALSE(check_eps_continuous(e, da, db).holds);

    EXPECT_EQ(code_of([&] { check_abs_continuous(e, da, Measure::zero(chain_algebra(3))); }),
              Errc::AlgebraMismatch);
}

TEST(Continuity, EpsDeltaTable) {
    const auto e = boolean_algebra(2);
    const auto m1 = boolean_nonneg(e, {q(1, 2), q(1)});
    const auto m2 = boolean_nonneg(e, {q(1, 3), q(1, 4)});
    const auto v = check_eps_continuous(e, m1, m2);
    EXPECT_TRUE(v.holds);
    // thresholds 1/2, 1, 3/2; delta is the least m2 value among elements with m1 >= eps
    ASSERT_EQ(v.eps_delta.size(), 3u);
    EXPECT_EQ(v.eps_delta[0].epsilon, q(1, 2));
    EXPECT_EQ(v.eps_delta[0].delta, q(1, 4));
    EXPECT_EQ(v.eps_delta[1].epsilon, q(1));
    EXPECT_EQ(v.eps_delta[1].delta, q(1, 4));
    EXPECT_EQ(v.eps_delta[2].epsilon, q(3, 2));
    EXPECT_EQ(v.eps_delta[2].delta, q(7, 12));
    // the table is a valid epsilon-delta witness: m2(a) < delta forces m1(a) < eps
    for (const auto& row : v.eps_delta)
        for (Element a = 0; a < e.size(); ++a)
            if (m2[a] < row.delta) EXPECT_LT(m1[a], row.epsilon);
}

TEST(Continuity, AbsoluteAndEpsilonAgreeOnSeededPairs) {
    Rng rng(31);
    for (const auto& [name, e] : corpus()) {
        const auto p = state_space(e);
        for (int k = 0; k < 40; ++k) {
            const auto m1 = sample_measure(e, p, rng(), 2);
            const auto m2 = sample_measure(e, p, rng(), 2);
            EXPECT_TRUE(check_eps_equiv_abs(e, m1, m2)) << name;
        }
    }
}

TEST(Lebesgue, BooleanExample) {
    const auto e = boolean_algebra(2);
    const auto p = state_space(e);
    const auto t = boolean_nonneg(e, {q(1), q(0)});
    const auto m = boolean_nonneg(e, {q(1, 2), q(1, 2)});
    const auto d = lebesgue_decompose(e, p, m, t);
    EXPECT_EQ(d.continuous, boolean_nonneg(e, {q(1, 2), q(0)}));
    EXPECT_EQ(d.singular, boolean_nonneg(e, {q(0), q(1, 2)}));
    EXPECT_EQ(d.engine.lp_optimum, q(1, 2));
    EXPECT_EQ(d.engine.singularity_optimum, 0);
    EXPECT_TRUE(d.continuity.holds);
    EXPECT_FALSE(d.singular_meet_zero);

    const auto de = eps_lebesgue_decompose(e, p, m, t);
    EXPECT_EQ(de.continuous, d.continuous);
    EXPECT_EQ(de.singular, d.singular);
    ASSERT_TRUE(de.singular_meet_zero);
    EXPECT_TRUE(*de.singular_meet_zero);
    EXPECT_TRUE(de.continuity.holds);
}

TEST(Lebesgue, SpecialCases) {
    const auto e = boolean_algebra(3);
    const auto p = state_space(e);
    const auto m = boolean_nonneg(e, {q(1), q(2, 3), q(1, 5)});
    const auto full = boolean_nonneg(e, {q(1), q(1), q(1)});
    const auto d = lebesgue_decompose(e, p, m, full);
    EXPECT_EQ(d.continuous, m);
    EXPECT_TRUE(d.singular.is_zero());

    // disjoint supports: nothing is continuous
    const auto m_disj = boolean_nonneg(e, {q(0), q(0), q(3)});
    const auto t_disj = boolean_nonneg(e, {q(1), q(1), q(0)});
    const auto s = lebesgue_decompose(e, p, m_disj, t_disj);
    EXPECT_TRUE(s.continuous.is_zero());
    EXPECT_EQ(s.singular, m_disj);
    EXPECT_EQ(s.engine.lp_optimum, 0);

    // m = t is continuous with respect to itself
    const auto same = eps_lebesgue_decompose(e, p, m, m);
    EXPECT_EQ(same.continuous, m);
    EXPECT_TRUE(same.singular.is_zero());
}

TEST(Lebesgue, ZeroDominatingMeasure) {
    // only the zero measure is continuous with respect to t = 0, so all of m is singular
    const auto e = boolean_algebra(2);
    const auto p = state_space(e);
    const auto m = boolean_nonneg(e, {q(1, 3), q(2)});
    for (const auto& d : {lebesgue_decompose(e, p, m, Measure::zero(e)),
                          eps_lebesgue_decompose(e, p, m, Measure::zero(e))}) {
        EXPECT_TRUE(d.face.empty());
        EXPECT_TRUE(d.continuous.is_zero());
        EXPECT_EQ(d.singular, m);
    }
}

TEST(Lebesgue, BooleanSupportSplitOracle) {
    Rng rng(41);
    for (unsigned n = 1; n <= 5; ++n) {
        const auto e = boolean_algebra(n);
        const auto p = state_space(e);
        for (int k = 0; k < 20; ++k) {
            const auto ma = random_atoms(rng, n, 200);
            const auto ta = random_atoms(rng, n, 400);
            const auto m = boolean_nonneg(e, ma);
            const auto t = boolean_nonneg(e, ta);
            const auto [on, off] = support_split(e, n, ma, ta);
            const auto d = lebesgue_decompose(e, p, m, t);
            EXPECT_EQ(d.continuous, on);
            EXPECT_EQ(d.singular, off);
            const auto de = eps_lebesgue_decompose(e, p, m, t);
            EXPECT_EQ(de.continuous, on);
            EXPECT_EQ(de.singular, off);
            EXPECT_TRUE(*de.singular_meet_zero);
            EXPECT_TRUE(meet(e, de.singular, t).is_zero());
        }
    }
}

TEST(Lebesgue, UniqueAdditiveAndOrderIndependent) {
    Rng rng(43);
    for (const auto& [name, e] : corpus()) {
        const auto p = state_space(e);
        if (!is_simplex(p)) continue;
        for (int k = 0; k < 5; ++k) {
            const auto m = sample_measure(e, p, rng());
            const auto m2 = sample_measure(e, p, rng());
            const auto t = sample_measure(e, p, rng(), 1);
            const auto d = lebesgue_decompose(e, p, m, t);
            std::vector<Element> order(e.size());
            std::iota(order.begin(), order.end(), Element{0});
            std::shuffle(order.begin(), order.end(), rng);
            const auto permuted = lebesgue_decompose(e, p, m, t, order);
            EXPECT_EQ(permuted.continuous, d.continuous) << name;
            EXPECT_EQ(permuted.singular, d.singular) << name;
            const auto sum = lebesgue_decompose(e, p, m + m2, t);
            const auto d2 = lebesgue_decompose(e, p, m2, t);
            EXPECT_EQ(sum.continuous, d.continuous + d2.continuous) << name;
            EXPECT_EQ(sum.singular, d.singular + d2.singular) << name;
            EXPECT_TRUE(check_abs_continuous(e, d.continuous, t).holds) << name;
            if (check_rdp(e).holds) {
                const auto de = eps_lebesgue_decompose(e, p, m, t, order);
                EXPECT_EQ(de.continuous, d.continuous) << name;
                EXPECT_EQ(de.singular, d.singular) << name;
                EXPECT_TRUE(*de.singular_meet_zero) << name;
            }
        }
    }
}

TEST(Center, Examples) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto e = boolean_algebra(n);
        const auto c = center(e);
        EXPECT_EQ(c.members.count(), e.size());
        EXPECT_TRUE(c.boolean_algebra_check);
    }
    for (unsigned n = 2; n <= 8; ++n) {
        const auto e = chain_algebra(n);
        const auto c = center(e);
        EXPECT_EQ(members(c.members), (std::vector<Element>{e.zero(), e.one()}));
        EXPECT_TRUE(c.boolean_algebra_check);
    }
    const auto d = diamond_algebra();
    EXPECT_EQ(members(center(d).members), (std::vector<Element>{d.zero(), d.one()}));
    // a has no common nonzero lower bound with a', yet b does not split along a
    EXPECT_EQ(poset_meet(d, d.at("a"), d.at("a'")), d.zero());
    EXPECT_FALSE(is_central(d, d.at("a")));
}

TEST(Center, ProductsHaveProductCenters) {
    const auto e = zoo("product(chain(2),boolean(2))");
    const auto c = center(e);
    // {0,2} x boolean(2)
    EXPECT_EQ(c.members.count(), 8u);
    EXPECT_TRUE(c.boolean_algebra_check);
    EXPECT_TRUE(is_central(e, e.at("(2,00)")));
    EXPECT_FALSE(is_central(e, e.at("(1,00)")));
}

TEST(Central, BooleanThreeExample) {
    const auto e = boolean_algebra(3);
    const auto t = boolean_nonneg(e, {q(1), q(1), q(0)});
    const auto m = boolean_nonneg(e, {q(1), q(1), q(1)});
    const auto d = central_lebesgue_decompose(e, m, t);
    EXPECT_EQ(d.a0, e.at("100"));
    EXPECT_EQ(d.continuous, boolean_nonneg(e, {q(1), q(1), q(0)}));
    EXPECT_EQ(d.singular, boolean_nonneg(e, {q(0), q(0), q(1)}));
    EXPECT_TRUE(d.a0_maximal);
    EXPECT_TRUE(d.modular_on_center);
    EXPECT_TRUE(d.continuity.holds);
    EXPECT_TRUE(d.orthogonal.holds);
    EXPECT_EQ(d.orthogonal.witness, d.a0);
    EXPECT_EQ(d.null_central, (std::vector<Element>{e.at("000"), e.at("100")}));
    // m1 = m( . ^ a0^-) and m2 = m( . ^ a0) pointwise
    for (Element x = 0; x < e.size(); ++x) {
        EXPECT_EQ(d.continuous[x], m[x & ~d.a0 & 7u]);
        EXPECT_EQ(d.singular[x], m[x & d.a0]);
    }
}

TEST(Central, TrivialCases) {
    const auto e = boolean_algebra(3);
    const auto m = boolean_nonneg(e, {q(1, 2), q(3), q(1)});
    const auto full = central_lebesgue_decompose(e, m, boolean_nonneg(e, {q(1), q(1), q(1)}));
    EXPECT_EQ(full.a0, e.zero());
    EXPECT_EQ(full.continuous, m);
    EXPECT_TRUE(full.singular.is_zero());
    const auto zero = central_lebesgue_decompose(e, Measure::zero(e), boolean_nonneg(e, {q(1), q(0), q(0)}));
    EXPECT_TRUE(zero.continuous.is_zero() && zero.singular.is_zero());
    EXPECT_EQ(zero.a0, e.at("110"));
}

TEST(Central, AgreesWithLebesgueOnBooleanAlgebras) {
    Rng rng(47);
    for (unsigned n = 1; n <= 5; ++n) {
        const auto e = boolean_algebra(n);
        const auto p = state_space(e);
        for (int k = 0; k < 20; ++k) {
            const auto m = boolean_nonneg(e, random_atoms(rng, n, 200));
            const auto t = boolean_nonneg(e, random_atoms(rng, n, 400));
            const auto c = central_lebesgue_decompose(e, m, t);
            const auto l = lebesgue_decompose(e, p, m, t);
            EXPECT_EQ(c.continuous, l.continuous);
            EXPECT_EQ(c.singular, l.singular);
            EXPECT_TRUE(c.orthogonal.holds);
            // the complement side of the orthogonality witness re-verifies
            EXPECT_EQ(c.singular[e.left_complement(c.a0)], 0);
            EXPECT_EQ(t[c.a0], 0);
        }
    }
}

TEST(Central, ChainHasOnlyTrivialSplit) {
    const auto e = chain_algebra(4);
    const auto s = Measure(state_space(e).extreme_states[0]);
    const auto d = central_lebesgue_decompose(e, q(3) * s, s);
    EXPECT_EQ(d.a0, e.zero());
    EXPECT_EQ(d.continuous, q(3) * s);
}

TEST(Central, RequiresRdp) {
    const auto d = diamond_algebra();
    EXPECT_EQ(code_of([&] { central_lebesgue_decompose(d, Measure::zero(d), Measure::zero(d)); }),
              Errc::RDPRequired);
}

TEST(Additivity, FiniteAlgebrasPassEveryMode) {
    for (const auto& [name, e] : corpus()) {
        const auto p = state_space(e);
        const auto m = sample_measure(e, p, 3);
        EXPECT_TRUE(check_sigma_additive(e, m).holds) << name;
        EXPECT_TRUE(check_upwards_continuous(e, m).holds) << name;
        if (e.is_commutative()) {
            const auto ca = check_completely_additive(e, m);
            EXPECT_TRUE(ca.holds) << name;
            EXPECT_GT(ca.families, 0u) << name;
            EXPECT_FALSE(ca.reduction.empty()) << name;
        }
    }
}

TEST(Additivity, CompletelyAdditiveNeedsCommutativity) {
    const auto& e = corpus_algebra("lex_s3");
    const auto m = sample_measure(e, state_space(e), 1);
    EXPECT_EQ(code_of([&] { check_completely_additive(e, m); }), Errc::NotCommutative);
    EXPECT_EQ(code_of([&] { yosida_hewitt_decompose(e, state_space(e), m, YosidaHewittMode::CompletelyAdditive); }),
              Errc::NotCommutative);
}

TEST(Additivity, JoinsOfAdditiveMeasuresStayAdditive) {
    Rng rng(53);
    for (const auto& [name, e] : corpus()) {
        if (!check_rdp(e).holds) continue;
        const auto p = state_space(e);
        const auto m = sample_measure(e, p, rng());
        const auto n = sample_measure(e, p, rng());
        const auto j = join(e, m, n);
        EXPECT_TRUE(check_sigma_additive(e, j).holds) << name;
        if (e.is_commutative()) EXPECT_TRUE(check_completely_additive(e, j).holds) << name;
    }
}

TEST(YosidaHewitt, DegenerateOnFiniteAlgebras) {
    Rng rng(59);
    for (const auto& [name, e] : corpus()) {
        const auto p = state_space(e);
        if (!is_simplex(p)) continue;
        for (auto mode : {YosidaHewittMode::CompletelyAdditive, YosidaHewittMode::Sigma,
                          YosidaHewittMode::UpwardsContinuous}) {
            if (mode == YosidaHewittMode::CompletelyAdditive && !e.is_commutative()) continue;
            const auto m = sample_measure(e, p, rng());
            const auto d = yosida_hewitt_decompose(e, p, m, mode);
            EXPECT_EQ(d.regular, m) << name << " " << mode_name(mode);
            EXPECT_TRUE(d.singular.is_zero()) << name;
            EXPECT_EQ(d.face, whole_face(p)) << name;
            EXPECT_EQ(d.engine.lp_optimum, m[e.one()]) << name;
            EXPECT_EQ(d.engine.singularity_optimum, 0) << name;
            EXPECT_EQ(d.state_traces.size(), p.extreme_states.size()) << name;
            EXPECT_TRUE(d.measure_trace.holds) << name;
        }
    }
}

TEST(YosidaHewitt, NonSimplexIsRejected) {
    const auto d = diamond_algebra();
    EXPECT_EQ(code_of([&] {
                  yosida_hewitt_decompose(d, state_space(d), Measure::zero(d), YosidaHewittMode::Sigma);
              }),
              Errc::NotASimplex);
}

TEST(JauchPiron, Examples) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto e = boolean_algebra(n);
        for (const auto& s : state_space(e).extreme_states) EXPECT_TRUE(check_jauch_piron(e, s).holds);
    }
    const auto c = chain_algebra(5);
    EXPECT_TRUE(check_jauch_piron(c, state_space(c).extreme_states[0]).holds);

    // the corner (s(a), s(b)) = (1, 0) kills a' and b, whose only common upper bound is 1
    const auto d = diamond_algebra();
    const auto p = state_space(d);
    for (const auto& s : p.extreme_states) {
        const auto v = check_jauch_piron(d, s);
        EXPECT_FALSE(v.holds);
        ASSERT_TRUE(v.witness);
        EXPECT_EQ(s[v.witness->first], 0);
        EXPECT_EQ(s[v.witness->second], 0);
        EXPECT_EQ(v.reading, "t(c) = 0");
    }
    EXPECT_TRUE(check_jauch_piron(d, Measure::zero(d)).holds);
}
