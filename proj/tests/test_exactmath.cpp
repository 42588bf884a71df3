#include <doctest.h>

#include <algorithm>
#include <random>

#include "shiq/rat_polynomial.hpp"
#include "shiq/smith.hpp"

using namespace shiq;

namespace {

IntMatrix matrix(std::size_t r, std::size_t c, std::vector<long> vals) {
    std::vector<Int> e;
    for (long v : vals) e.emplace_back(v);
    return IntMatrix(r, c, std::move(e));
}

Int determinant(const IntMatrix &m, const std::vector<std::size_t> &rows,
                const std::vector<std::size_t> &cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Int acc = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != k) sub_cols.push_back(cols[c]);
        Int minor = determinant(m, sub_rows, sub_cols);
        acc += (k % 2 == 0 ? 1 : -1) * m.at(rows[0], cols[k]) * minor;
    }
    return acc;
}

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>> &out) {
    std::vector<std::size_t> pick(k);
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::size_t p = 0;
        for (std::size_t t = 0; t < n; ++t)
            if (mask[t]) pick[p++] = t;
        out.push_back(pick);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

// gcd of all k x k minors; d_k = D_k / D_{k-1}.
std::vector<Int> minor_gcd_divisors(const IntMatrix &m) {
    std::vector<Int> dk;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        combinations(m.rows, k, row_sets);
        combinations(m.cols, k, col_sets);
        Int g = 0;
        for (const auto &rs : row_sets)
            for (const auto &cs : col_sets) g = gcd_int(g, determinant(m, rs, cs));
        if (g == 0) break;
        dk.push_back(g / prev);
        prev = g;
    }
    return dk;
}

}  // namespace

TEST_CASE("elementary divisors of pinned matrices") {
    CHECK(smith_elementary_divisors(matrix(2, 2, {2, 0, 0, 2})) == std::vector<Int>{2, 2});
    CHECK(smith_elementary_divisors(matrix(2, 2, {1, 1, 1, -1})) == std::vector<Int>{1, 2});
    CHECK(smith_elementary_divisors(matrix(1, 2, {1, 0})) == std::vector<Int>{1});
    CHECK(smith_elementary_divisors(matrix(2, 3, {0, 0, 0, 0, 0, 0})).empty());
    CHECK(smith_elementary_divisors(matrix(3, 1, {4, 6, 10})) == std::vector<Int>{2});
}

TEST_CASE("divisor chain, invariance and the minor-gcd oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> dim(1, 4);

    for (int round = 0; round < 300; ++round) {
        std::size_t r = static_cast<std::size_t>(dim(rng));
        std::size_t c = static_cast<std::size_t>(dim(rng));
        IntMatrix m(r, c);
        for (auto &v : m.entries) v = entry(rng);

        auto d = smith_elementary_divisors(m);
        for (std::size_t k = 0; k + 1 < d.size(); ++k) CHECK(d[k + 1] % d[k] == 0);
        for (const auto &v : d) CHECK(v > 0);
        CHECK(d == minor_gcd_divisors(m));

        // row/column permutation and a row sign flip leave the divisors alone
        IntMatrix p = m;
        if (r > 1) {
            for (std::size_t j = 0; j < c; ++j) std::swap(p.at(0, j), p.at(r - 1, j));
        }
        if (c > 1) {
            for (std::size_t i = 0; i < r; ++i) std::swap(p.at(i, 0), p.at(i, c - 1));
        }
        for (std::size_t j = 0; j < c; ++j) p.at(0, j) = -p.at(0, j);
        CHECK(smith_elementary_divisors(p) == d);
    }
}

TEST_CASE("interpolation recovers pinned polynomials") {
    auto sq = interpolate_polynomial({{1, 1}, {2, 4}, {3, 9}});
    CHECK(sq == RatPolynomial({Rat(0), Rat(0), Rat(1)}));

    auto lin = interpolate_polynomial({{5, 3}, {7, 5}, {9, 7}});
    CHECK(lin == RatPolynomial({Rat(-2), Rat(1)}));

    auto shifted = interpolate_polynomial({{3, 0}, {5, 4}, {7, 16}, {9, 36}});
    CHECK(shifted == RatPolynomial({Rat(9), Rat(-6), Rat(1)}));
    for (long q : {3, 5, 7, 9}) CHECK(shifted(Int(q)) == Rat((q - 3) * (q - 3)));

    CHECK_THROWS_AS(interpolate_polynomial({{1, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(interpolate_polynomial({}), std::invalid_argument);
}

TEST_CASE("interpolation round-trips random integer data") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> value(-50, 50);
    for (int round = 0; round < 100; ++round) {
        std::vector<std::pair<Int, Int>> pts;
        int n = 1 + round % 6;
        for (int k = 0; k < n; ++k) pts.emplace_back(Int(3 * k + 1), Int(value(rng)));
        auto poly = interpolate_polynomial(pts);
        CHECK(poly.degree() < n);
        for (const auto &[x, y] : pts) CHECK(poly(x) == Rat(y));
    }
}

TEST_CASE("polynomial arithmetic basics") {
    RatPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero(Int(5)) == 0);

    auto p = RatPolynomial::shifted_power(Rat(-4), 2);  // (q-4)^2
    CHECK(p.degree() == 2);
    CHECK(p.is_monic());
    CHECK(p(Int(10)) == 36);
    CHECK((p - p).is_zero());
    CHECK(p.str() == "q^2 - 8*q + 16");

    // trailing zero trim: (q+1) - q - 1 == 0
    RatPolynomial a({Rat(1), Rat(1)});
    RatPolynomial b({Rat(0), Rat(1)});
    CHECK((a - b - RatPolynomial::constant(1)).is_zero());
}
