#include <pea/polytope.hpp>
#include <pea/error.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace pea {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct Ray {
    RationalVector direction;
    ZeroSet zeros;
};

}  // namespace

std::vector<RationalVector> polytope_vertices(const RationalMatrix& rows, const RationalVector& offsets,
                                              std::size_t dimension) {
    const std::size_t width = dimension + 1;  // homogenizing coordinate last

    RationalMatrix constraints;
    {
        RationalVector t_row(width, Rational(0));
        t_row[dimension] = 1;
        constraints.push_back(std::move(t_row));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RationalVector h = rows[i];
        h.push_back(offsets[i]);
        if (std::all_of(h.begin(), h.end(), [](const Rational& x) { return x == 0; })) continue;
        make_primitive(h);
        if (std::find(constraints.begin(), constraints.end(), h) == constraints.end())
            constraints.push_back(std::move(h));
    }
    const std::size_t m = constraints.size();

    // initial simplicial cone from the first independent rows
    std::vector<std::size_t> chosen;
    RationalMatrix chosen_rows;
    for (std::size_t i = 0; i < m && chosen.size() < width; ++i) {
        chosen_rows.push_back(constraints[i]);
        if (rank(chosen_rows) == chosen_rows.size()) {
            chosen.push_back(i);
        } else {
            chosen_rows.pop_back();
        }
    }
    if (chosen.size() < width) internal_error("double description: constraint rows do not span the space");

    auto inv = inverse(chosen_rows);
    if (!inv) internal_error("double description: singular initial basis");

    ZeroSet processed(m);
    for (auto i : chosen) processed.set(i);

    auto zeros_of = [&](const RationalVector& v) {
        ZeroSet z(m);
        for (auto i = processed.find_first(); i != ZeroSet::npos; i = processed.find_next(i))
            if (dot(constraints[i], v) == 0) z.set(i);
        return z;
    };

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < width; ++j) {
        RationalVector v(width);
        for (std::size_t r = 0; r < width; ++r) v[r] = (*inv)[r][j];
        make_primitive(v);
        ZeroSet z = zeros_of(v);
        rays.push_back({std::move(v), std::move(z)});
    }

    for (std::size_t k = 0; k < m; ++k) {
        if (processed.test(k)) continue;
        const RationalVector& h = constraints[k];
        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> plus, zero, minus;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(h, rays[r].direction);
            if (value[r] > 0) plus.push_back(r);
            else if (value[r] == 0) zero.push_back(r);
            else minus.push_back(r);
        }
        processed.set(k);
        if (minus.empty()) {
            for (auto r : zero) rays[r].zeros.set(k);
            continue;
        }

        std::vector<Ray> next;
        for (auto r : plus) next.push_back(rays[r]);
        for (auto r : zero) {
            next.push_back(rays[r]);
            next.back().zeros.set(k);
        }
        for (auto p : plus)
            for (auto q : minus) {
                ZeroSet common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < width) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
                if (!adjacent) continue;
                RationalVector v(width);
                for (std::size_t i = 0; i < width; ++i)
                    v[i] = value[p] * rays[q].direction[i] - value[q] * rays[p].direction[i];
                make_primitive(v);
                common.set(k);
                next.push_back({std::move(v), std::move(common)});
            }
        rays = std::move(next);
    }

    std::vector<RationalVector> vertices;
    for (const auto& ray : rays) {
        const Rational& t = ray.direction[dimension];
        if (t <= 0) continue;
        RationalVector y(dimension);
        for (std::size_t i = 0; i < dimension; ++i) y[i] = ray.direction[i] / t;
        vertices.push_back(std::move(y));
    }
    return vertices;
}

}  // namespace pea
