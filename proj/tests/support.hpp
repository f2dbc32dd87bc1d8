#pragma once

#include <pea/algebra.hpp>
#include <pea/lp.hpp>
#include <pea/measures.hpp>
#include <pea/zoo.hpp>

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace pea::testing {

struct CorpusEntry {
    std::string name;
    PseudoEffectAlgebra algebra;
};

// Gamma(Z x_lex S3, (3, e)): {0} u {(1,g)} u {(2,g)} u {1}, 14 elements.
// (1,g) + (1,h) = (2,gh); (1,g) + (2,h) = 1 iff gh = e.
inline PseudoEffectAlgebra lex_s3() {
    // S3 as permutations of {0,1,2}, composed as (g h)(i) = g(h(i))
    std::vector<std::array<int, 3>> g;
    std::array<int, 3> p{0, 1, 2};
    do g.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto compose = [&](int x, int y) {
        std::array<int, 3> r{};
        for (int i = 0; i < 3; ++i) r[i] = g[x][g[y][i]];
        return int(std::find(g.begin(), g.end(), r) - g.begin());
    };
    std::vector<std::string> labels{"0"};
    for (int level = 1; level <= 2; ++level)
        for (std::size_t k = 0; k < g.size(); ++k)
            labels.push_back(std::to_string(level) + "." + std::to_string(g[k][0]) + std::to_string(g[k][1]) +
                             std::to_string(g[k][2]));
    labels.push_back("u");
    auto at = [](int level, int k) { return Element(1 + (level - 1) * 6 + k); };
    const Element one = 13;
    std::vector<SumTriple> t;
    for (Element x = 0; x < 14; ++x) t.insert(t.end(), {{0, x, x}, {x, 0, x}});
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            const int xy = compose(x, y);
            t.push_back({at(1, x), at(1, y), at(2, xy)});
            if (xy == 0) {
                t.push_back({at(1, x), at(2, y), one});
                t.push_back({at(2, x), at(1, y), one});
            }
        }
    return build_algebra(std::move(labels), 0, one, std::move(t));
}

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        auto add = [&](const std::string& expr) { out.push_back({expr, zoo(expr)}); };
        for (int n = 1; n <= 5; ++n) add("boolean(" + std::to_string(n) + ")");
        for (int n = 1; n <= 12; ++n) add("chain(" + std::to_string(n) + ")");
        add("diamond");
        add("interval(coordinatewise,2,1)");
        add("interval(coordinatewise,1,1,1)");
        add("interval(coordinatewise,3,2)");
        add("product(chain(2),chain(2))");
        add("product(chain(2),boolean(2))");
        add("product(chain(3),chain(1))");
        add("product(diamond,chain(1))");
        add("horizontal_sum(chain(2),chain(2))");
        add("horizontal_sum(boolean(2),chain(3))");
        add("horizontal_sum(boolean(2),boolean(2))");
        add("product(horizontal_sum(chain(2),chain(2)),chain(1))");
        out.push_back({"lex_s3", lex_s3()});
        return out;
    }();
    return entries;
}

inline const PseudoEffectAlgebra& corpus_algebra(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e.algebra;
    throw std::out_of_range(name);
}

// Raw table lookups only: no precomputed order, differences or bitsets.
inline Element raw_sum(const PseudoEffectAlgebra& e, Element a, Element b) { return e.sum(a, b); }

inline bool raw_leq(const PseudoEffectAlgebra& e, Element a, Element b) {
    for (Element c = 0; c < e.size(); ++c)
        if (raw_sum(e, a, c) == b) return true;
    return false;
}

// Refinement search straight from the definition, over all 4-tuples.
enum class Refinement { Plain, Commuting, Disjoint };

inline bool raw_commute(const PseudoEffectAlgebra& e, Element a, Element b) {
    for (Element x = 0; x < e.size(); ++x)
        for (Element y = 0; y < e.size(); ++y)
            if (raw_leq(e, x, a) && raw_leq(e, y, b) && raw_sum(e, x, y) != raw_sum(e, y, x)) return false;
    return true;
}

inline bool raw_disjoint(const PseudoEffectAlgebra& e, Element a, Element b) {
    for (Element x = 0; x < e.size(); ++x)
        if (x != e.zero() && raw_leq(e, x, a) && raw_leq(e, x, b)) return false;
    return true;
}

inline bool oracle_refines(const PseudoEffectAlgebra& e, Refinement kind, Element a1, Element a2, Element b1,
                           Element b2) {
    const Element n = Element(e.size());
    for (Element d1 = 0; d1 < n; ++d1)
        for (Element d2 = 0; d2 < n; ++d2) {
            if (raw_sum(e, d1, d2) != a1) continue;
            for (Element d3 = 0; d3 < n; ++d3) {
                if (raw_sum(e, d1, d3) != b1) continue;
                for (Element d4 = 0; d4 < n; ++d4) {
                    if (raw_sum(e, d3, d4) != a2 || raw_sum(e, d2, d4) != b2) continue;
                    if (kind == Refinement::Commuting && !raw_commute(e, d2, d3)) continue;
                    if (kind == Refinement::Disjoint && !raw_disjoint(e, d2, d3)) continue;
                    return true;
                }
            }
        }
    return false;
}

inline bool oracle_rdp(const PseudoEffectAlgebra& e, Refinement kind) {
    const Element n = Element(e.size());
    for (Element a1 = 0; a1 < n; ++a1)
        for (Element a2 = 0; a2 < n; ++a2) {
            const Element c = raw_sum(e, a1, a2);
            if (c == kUndefined) continue;
            for (Element b1 = 0; b1 < n; ++b1)
                for (Element b2 = 0; b2 < n; ++b2)
                    if (raw_sum(e, b1, b2) == c && !oracle_refines(e, kind, a1, a2, b1, b2)) return false;
        }
    return true;
}

inline bool oracle_rdp0(const PseudoEffectAlgebra& e) {
    const Element n = Element(e.size());
    for (Element b1 = 0; b1 < n; ++b1)
        for (Element b2 = 0; b2 < n; ++b2) {
            const Element c = raw_sum(e, b1, b2);
            if (c == kUndefined) continue;
            for (Element a = 0; a < n; ++a) {
                if (!raw_leq(e, a, c)) continue;
                bool found = false;
                for (Element d1 = 0; d1 < n && !found; ++d1)
                    for (Element d2 = 0; d2 < n && !found; ++d2)
                        found = raw_leq(e, d1, b1) && raw_leq(e, d2, b2) && raw_sum(e, d1, d2) == a;
                if (!found) return false;
            }
        }
    return true;
}

inline bool oracle_rip(const PseudoEffectAlgebra& e) {
    const Element n = Element(e.size());
    for (Element a1 = 0; a1 < n; ++a1)
        for (Element a2 = 0; a2 < n; ++a2)
            for (Element b1 = 0; b1 < n; ++b1)
                for (Element b2 = 0; b2 < n; ++b2) {
                    if (!(raw_leq(e, a1, b1) && raw_leq(e, a1, b2) && raw_leq(e, a2, b1) && raw_leq(e, a2, b2)))
                        continue;
                    bool found = false;
                    for (Element c = 0; c < n && !found; ++c)
                        found = raw_leq(e, a1, c) && raw_leq(e, a2, c) && raw_leq(e, c, b1) && raw_leq(e, c, b2);
                    if (!found) return false;
                }
    return true;
}

// sup/inf over all ordered decompositions x = x_1 + ... + x_k by explicit
// recursion on the raw table (no prefix-sum dynamic programming).
inline Rational oracle_extremum(const PseudoEffectAlgebra& e, std::span<const SignedMeasure> ms, Element x,
                                bool maximize) {
    std::optional<Rational> best;
    std::function<void(std::size_t, Element, Rational)> go = [&](std::size_t i, Element rest, Rational acc) {
        if (i + 1 == ms.size()) {
            Rational total = acc + ms[i][rest];
            if (!best || (maximize ? total > *best : total < *best)) best = total;
            return;
        }
        for (Element head = 0; head < e.size(); ++head)
            for (Element tail = 0; tail < e.size(); ++tail)
                if (raw_sum(e, head, tail) == rest) go(i + 1, tail, acc + ms[i][head]);
    };
    go(0, x, Rational(0));
    return *best;
}

// LP membership of x in the convex hull of the given points.
inline bool in_convex_hull(const std::vector<State>& points, const RationalVector& x) {
    const std::size_t k = points.size();
    lp::Program prog;
    prog.objective.assign(k, Rational(0));
    for (std::size_t j = 0; j < x.size(); ++j) {
        lp::Constraint c{RationalVector(k), lp::Relation::Equal, x[j]};
        for (std::size_t i = 0; i < k; ++i) c.coefficients[i] = points[i][Element(j)];
        prog.constraints.push_back(std::move(c));
    }
    prog.constraints.push_back({RationalVector(k, Rational(1)), lp::Relation::Equal, Rational(1)});
    return lp::maximize(prog).status == lp::Status::Optimal;
}

inline Rational random_rational(Rng& rng, unsigned max_den = 6, unsigned scale = 1) {
    const std::uint64_t den = 1 + uniform_below(rng, max_den);
    return make_rational(long(uniform_below(rng, scale * den + 1)), long(den));
}

// Signed measure with values given on the Boolean atoms (bitmask indices).
inline SignedMeasure boolean_measure(const PseudoEffectAlgebra& e, const RationalVector& atoms) {
    RationalVector v(e.size(), Rational(0));
    for (Element x = 0; x < e.size(); ++x)
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (x >> i & 1) v[x] += atoms[i];
    return SignedMeasure(e, std::move(v));
}

inline Measure boolean_nonneg(const PseudoEffectAlgebra& e, const RationalVector& atoms) {
    return Measure(boolean_measure(e, atoms));
}

}  // namespace pea::testing
