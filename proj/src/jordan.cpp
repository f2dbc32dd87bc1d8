#include <pea/jordan.hpp>

namespace pea {

namespace {

template <typename Better>
LatticeResult extremal_decomposition(const PseudoEffectAlgebra& algebra,
                                     std::span<const SignedMeasure> measures, Better better) {
    if (measures.empty()) internal_error("lattice operation on an empty family");
    const std::size_t n = algebra.size();
    for (const auto& m : measures)
        if (m.algebra_hash() != algebra.hash()) throw Error(Errc::AlgebraMismatch, "measure of another algebra");

    RationalVector best = measures.front().values();
    std::vector<std::vector<Element>> parts(n);
    for (Element x = 0; x < n; ++x) parts[x] = {x};

    for (std::size_t k = 1; k < measures.size(); ++k) {
        const SignedMeasure& next = measures[k];
        RationalVector updated(n);
        std::vector<std::vector<Element>> updated_parts(n);
        for (Element y = 0; y < n; ++y) {
            bool first = true;
            const SumTriple* arg = nullptr;
            for (const auto& t : algebra.decompositions(y)) {
                Rational candidate = best[t.a] + next[t.b];
                if (first || better(candidate, updated[y])) {
                    updated[y] = std::move(candidate);
                    arg = &t;
                    first = false;
                }
            }
            if (!arg) internal_error("element without a decomposition y = y + 0");
            updated_parts[y] = parts[arg->a];
            updated_parts[y].push_back(arg->b);
        }
        best = std::move(updated);
        parts = std::move(updated_parts);
    }

    try {
        return {SignedMeasure(algebra, std::move(best)), std::move(parts)};
    } catch (const Error& e) {
        if (e.code() != Errc::AdditivityViolation) throw;
        throw Error(Errc::NotAdditive, std::string("lattice formula result is not additive (") + e.what() + ")",
                    e.witness());
    }
}

}  // namespace

LatticeResult lattice_join(const PseudoEffectAlgebra& algebra, std::span<const SignedMeasure> measures) {
    return extremal_decomposition(algebra, measures, [](const Rational& x, const Rational& y) { return x > y; });
}

LatticeResult lattice_meet(const PseudoEffectAlgebra& algebra, std::span<const SignedMeasure> measures) {
    return extremal_decomposition(algebra, measures, [](const Rational& x, const Rational& y) { return x < y; });
}

SignedMeasure join(const PseudoEffectAlgebra& algebra, const SignedMeasure& x, const SignedMeasure& y) {
    const SignedMeasure pair[] = {x, y};
    return lattice_join(algebra, pair).value;
}

SignedMeasure meet(const PseudoEffectAlgebra& algebra, const SignedMeasure& x, const SignedMeasure& y) {
    const SignedMeasure pair[] = {x, y};
    return lattice_meet(algebra, pair).value;
}

Measure join(const PseudoEffectAlgebra& algebra, const Measure& x, const Measure& y) {
    return Measure(join(algebra, static_cast<const SignedMeasure&>(x), static_cast<const SignedMeasure&>(y)));
}

Measure meet(const PseudoEffectAlgebra& algebra, const Measure& x, const Measure& y) {
    return Measure(meet(algebra, static_cast<const SignedMeasure&>(x), static_cast<const SignedMeasure&>(y)));
}

JordanMeasure jordan_decompose(const PseudoEffectAlgebra& algebra, const SignedMeasure& m) {
    const SignedMeasure zero = SignedMeasure::zero(algebra);
    auto fail = [&](const std::string& why, std::vector<Element> witness = {}) -> JordanMeasure {
        throw Error(Errc::NotJordan, why, std::move(witness));
    };
    try {
        SignedMeasure plus = join(algebra, m, zero);
        SignedMeasure minus = join(algebra, -m, zero);
        if (plus - minus != m) {
            for (Element x = 0; x < algebra.size(); ++x)
                if (plus[x] - minus[x] != m[x]) return fail("m != (m v 0) - ((-m) v 0)", {x});
        }
        Measure p(plus);
        Measure q(minus);
        if (!meet(algebra, p, q).is_zero()) return fail("m+ ^ m- != 0");
        return {m, std::move(p), std::move(q)};
    } catch (const Error& e) {
        if (e.code() != Errc::NotAdditive && e.code() != Errc::NotAMeasure) throw;
        return fail(e.what(), e.witness());
    }
}

Measure chain_sup(const PseudoEffectAlgebra& algebra, std::span<const Measure> chain) {
    if (chain.empty()) throw Error(Errc::NotAChain, "empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!chain[i].leq(chain[i + 1])) {
            for (Element x = 0; x < algebra.size(); ++x)
                if (chain[i][x] > chain[i + 1][x])
                    throw Error(Errc::NotAChain, "member " + std::to_string(i) + " exceeds its successor at " +
                                                     algebra.label(x), {x});
        }
    const Measure& top = chain.back();
    std::vector<SignedMeasure> family(chain.begin(), chain.end());
    if (lattice_join(algebra, family).value != top)
        internal_error("join of a chain differs from its pointwise supremum");
    return top;
}

bool is_disjoint(const PseudoEffectAlgebra& algebra, const Measure& x, const Measure& y) {
    return meet(algebra, x, y).is_zero();
}

}  // namespace pea
