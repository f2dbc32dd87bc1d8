#include <pea/linalg.hpp>
#include <pea/error.hpp>

#include <utility>

namespace pea {

RationalVector AffineSolution::evaluate(const RationalVector& y) const {
    RationalVector x = offset;
    for (std::size_t k = 0; k < directions.size(); ++k) {
        if (y[k] == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (directions[k][i] != 0) x[i] += y[k] * directions[k][i];
    }
    return x;
}

namespace {

// Reduces `row` against the pivot rows; all pivot rows are normalized to 1
// on their pivot column.
void reduce(RationalVector& row, const RationalMatrix& basis, const std::vector<std::size_t>& pivots) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const std::size_t p = pivots[r];
        if (row[p] == 0) continue;
        const Rational factor = row[p];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (basis[r][j] != 0) row[j] -= factor * basis[r][j];
    }
}

}  // namespace

std::optional<AffineSolution> solve_affine(const RationalMatrix& rows, std::size_t columns) {
    RationalMatrix basis;
    std::vector<std::size_t> pivots;
    for (const auto& input : rows) {
        if (input.size() != columns + 1) internal_error("solve_affine: row width mismatch");
        RationalVector row = input;
        reduce(row, basis, pivots);
        std::size_t p = 0;
        while (p < columns && row[p] == 0) ++p;
        if (p == columns) {
            if (row[columns] != 0) return std::nullopt;
            continue;
        }
        const Rational lead = row[p];
        for (auto& v : row) v /= lead;
        // keep the basis fully reduced on the new pivot column
        for (auto& b : basis) {
            if (b[p] == 0) continue;
            const Rational factor = b[p];
            for (std::size_t j = 0; j <= columns; ++j)
                if (row[j] != 0) b[j] -= factor * row[j];
        }
        basis.push_back(std::move(row));
        pivots.push_back(p);
    }

    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) is_pivot[p] = true;

    AffineSolution sol;
    sol.offset.assign(columns, Rational(0));
    for (std::size_t r = 0; r < basis.size(); ++r) sol.offset[pivots[r]] = basis[r][columns];
    for (std::size_t f = 0; f < columns; ++f) {
        if (is_pivot[f]) continue;
        sol.free_columns.push_back(f);
        RationalVector dir(columns, Rational(0));
        dir[f] = 1;
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (basis[r][f] != 0) dir[pivots[r]] = -basis[r][f];
        sol.directions.push_back(std::move(dir));
    }
    return sol;
}

std::size_t rank(RationalMatrix rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& square) {
    const std::size_t n = square.size();
    RationalMatrix a = square;
    RationalMatrix inv(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        const Rational lead = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= lead;
            inv[c][j] /= lead;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational factor = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= factor * a[c][j];
                inv[i][j] -= factor * inv[c][j];
            }
        }
    }
    return inv;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
    return s;
}

void make_primitive(RationalVector& v) {
    mpz_class lcm = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class gcd = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        mpz_class scaled = x.get_num() * (lcm / x.get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (gcd == 0) return;
    for (auto& x : v) {
        if (x == 0) continue;
        mpz_class scaled = x.get_num() * (lcm / x.get_den());
        x = Rational(mpz_class(scaled / gcd));
    }
}

}  // namespace pea
