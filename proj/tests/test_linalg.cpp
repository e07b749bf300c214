#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sl2ext/linalg.hpp"

using namespace sl2ext::linalg;

namespace {

Matrix from_rows(std::vector<Vec> rows)
{
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Elem mod)
{
    Matrix m(r, c);
    for (auto& x : m.a)
        x = static_cast<Elem>(rng() % mod);
    return m;
}

}  // namespace

TEST_CASE("field arithmetic")
{
    const Field f(7);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.mul(f.inv(3), 3) == 1);
    CHECK(f.neg(0) == 0);
    CHECK_THROWS(f.inv(0));
    CHECK_THROWS(Field(9));
    CHECK_THROWS(Field(1));
    for (Elem x = 1; x < 32003; x += 97)
        CHECK(Field(32003).mul(x, Field(32003).inv(x)) == 1);
}

TEST_CASE("rank and kernel of a small matrix")
{
    const Field f(5);
    const Matrix x = from_rows({{1, 2, 3}, {0, 1, 4}, {1, 3, 2}});
    // row 3 = row 1 + row 2 over F_5
    CHECK(rank(f, x) == 2);
    const Matrix k = kernel(f, x);
    CHECK(k.cols == 1);
    CHECK(multiply(f, x, k).is_zero());
    CHECK(column_space(f, x).cols == 2);
}

TEST_CASE("rank-nullity on random matrices")
{
    std::mt19937_64 rng(11);
    const Field f(13);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = 1 + rng() % 6;
        const std::size_t c = 1 + rng() % 6;
        // low-rank products hit degenerate cases more often
        const std::size_t inner = rng() % 4;
        const Matrix x = multiply(f, random_matrix(rng, r, inner, 13), random_matrix(rng, inner, c, 13));
        const Matrix k = kernel(f, x);
        CHECK(rank(f, x) + k.cols == c);
        CHECK(multiply(f, x, k).is_zero());
        CHECK(rank(f, k) == k.cols);
    }
}

TEST_CASE("solve and inverse")
{
    const Field f(11);
    const Matrix x = from_rows({{2, 1}, {1, 1}});
    const auto v = solve(f, x, Vec{3, 2});
    REQUIRE(v);
    CHECK(apply(f, x, *v) == Vec{3, 2});
    const auto inv = inverse(f, x);
    REQUIRE(inv);
    CHECK(multiply(f, x, *inv) == Matrix::identity(2));
    CHECK_FALSE(inverse(f, from_rows({{1, 2}, {2, 4}})));
    CHECK_FALSE(solve(f, from_rows({{1, 2}, {2, 4}}), Vec{1, 0}));
}

TEST_CASE("intersection of subspaces")
{
    const Field f(7);
    // span(e1, e2) and span(e2, e3) meet in span(e2)
    const Matrix u = from_rows({{1, 0}, {0, 1}, {0, 0}});
    const Matrix v = from_rows({{0, 0}, {1, 0}, {0, 1}});
    const Matrix w = intersect(f, u, v);
    CHECK(w.cols == 1);
    CHECK(w.at(0, 0) == 0);
    CHECK(w.at(2, 0) == 0);
    CHECK(w.at(1, 0) != 0);
}

TEST_CASE("subquotients")
{
    const Field f(7);
    const Matrix num = Matrix::identity(3);
    const Matrix den = from_rows({{1}, {1}, {0}});
    const Subquotient q(f, num, den);
    CHECK(q.dim() == 2);
    // (1,1,0) is zero in the quotient
    CHECK(q.coords(f, Vec{1, 1, 0}) == Vec{0, 0});
    CHECK_THROWS_AS(Subquotient(f, den, Matrix(3, 0)).coords(f, Vec{0, 0, 1}), std::logic_error);
}
