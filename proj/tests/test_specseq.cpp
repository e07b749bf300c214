#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "sl2ext/specseq.hpp"

using namespace sl2ext;
using namespace sl2ext::specseq;
using linalg::Matrix;

namespace {

Matrix scalar(Elem x)
{
    Matrix m(1, 1);
    m.at(0, 0) = x;
    return m;
}

/// Four one-dimensional spots on a unit square, all maps nonzero.
Bicomplex unit_square()
{
    Bicomplex b(2, 2);
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
            b.set_dim(m, n, 1);
    b.set_d1(0, 0, scalar(1));
    b.set_d1(0, 1, scalar(1));
    b.set_d0(0, 0, scalar(1));
    b.set_d0(1, 0, scalar(kDefaultModulus - 1));
    return b;
}

std::string text_of(const Bicomplex& b)
{
    std::ostringstream out;
    write_text(out, b);
    return out.str();
}

std::vector<Bicomplex> sample(Mode mode, int count, std::uint64_t seed)
{
    std::vector<Bicomplex> out;
    for (int s = 0; s < count; ++s)
        out.push_back(random_bicomplex(seed + s, Shape{static_cast<std::size_t>(1 + s % 5), static_cast<std::size_t>(1 + (s / 5) % 5), 4}, mode));
    return out;
}

}  // namespace

TEST_CASE("validation")
{
    CHECK(validate(Bicomplex(3, 3)).ok());
    CHECK(validate(witness()).ok());
    CHECK(validate(unit_square()).ok());

    Bicomplex flipped = unit_square();
    flipped.set_d0(1, 0, scalar(1));
    const auto report = validate(flipped);
    REQUIRE_FALSE(report.ok());
    CHECK(report.first->kind == Violation::Kind::Anticommute);
    CHECK(report.first->m == 0);
    CHECK(report.first->n == 0);

    // commuting squares become anticommuting after the sign toggle
    CHECK(validate(flipped.toggle_vertical_signs()).ok());
    CHECK(unit_square().toggle_vertical_signs().toggle_vertical_signs() == unit_square());

    Bicomplex bad(1, 3);
    for (int n = 0; n < 3; ++n)
        bad.set_dim(0, n, 1);
    bad.set_d0(0, 0, scalar(1));
    bad.set_d0(0, 1, scalar(1));
    REQUIRE_FALSE(validate(bad).ok());
    CHECK(validate(bad).first->kind == Violation::Kind::D0Squared);

    CHECK_THROWS(Bicomplex(2, 2).set_d0(0, 0, scalar(1)));
}

TEST_CASE("total homology")
{
    Bicomplex single(1, 1);
    single.set_dim(0, 0, 1);
    CHECK(total_homology(single) == std::vector<std::size_t>{1});

    Bicomplex pair(2, 1);
    pair.set_dim(0, 0, 1);
    pair.set_dim(1, 0, 1);
    pair.set_d1(0, 0, scalar(1));
    CHECK(total_homology(pair) == std::vector<std::size_t>{0, 0});

    CHECK(total_homology(witness()) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("first page is the vertical homology")
{
    for (const auto& b : sample(Mode::Generic, 50, 100)) {
        const Page e1 = page(b, 1);
        const linalg::Field& f = b.field();
        for (int m = 0; m < static_cast<int>(b.width()); ++m)
            for (int n = 0; n < static_cast<int>(b.height()); ++n) {
                const std::size_t out = linalg::rank(f, b.d0(m, n));
                const std::size_t in = n > 0 ? linalg::rank(f, b.d0(m, n - 1)) : 0;
                CHECK(e1.dim(m, n) == b.dim(m, n) - out - in);
            }
    }
}

TEST_CASE("witness pages")
{
    const Bicomplex w = witness();
    const Page e2 = page(w, 2, true);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 2; ++n) {
            const bool alive = (m == 0 && n == 1) || (m == 2 && n == 0);
            CHECK(e2.dim(m, n) == (alive ? 1u : 0u));
        }
    REQUIRE(e2.differentials.count({0, 1}) == 1);
    CHECK_FALSE(e2.differentials.at({0, 1}).is_zero());

    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 2; ++n) {
            CHECK(page(w, 3).dim(m, n) == 0);
            CHECK(e_infinity(w).dim(m, n) == 0);
        }

    const auto report = check_collapse(w);
    CHECK(report.hypothesis == CollapseReport::Hypothesis::None);
    CHECK_FALSE(report.e2_equals_einf);
    CHECK(report.converges);
}

TEST_CASE("witness golden file")
{
    std::ifstream in(SL2EXT_TEST_DATA "/witness.specseq");
    REQUIRE(in);
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(text_of(witness()) == golden.str());

    std::istringstream again(golden.str());
    const Bicomplex parsed = read_text(again);
    CHECK(parsed == witness());
    CHECK(text_of(parsed) == golden.str());
}

TEST_CASE("text format rejects malformed input")
{
    for (const char* text : {"", "specseq v2 32003 1 1\nend\n", "specseq v1 32003 1 1\ndim 0 0 x\nend\n",
                             "specseq v1 32003 2 1\ndim 0 0 1\ndim 1 0 1\nd1 0 0 1 1\n", "specseq v1 4 1 1\ndim 0 0 1\nend\n"}) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_text(in), std::invalid_argument);
    }
    for (const auto& b : sample(Mode::Generic, 20, 7)) {
        std::istringstream in(text_of(b));
        CHECK(read_text(in) == b);
    }
}

TEST_CASE("exact couples")
{
    for (const auto& b : sample(Mode::Generic, 40, 900)) {
        const ExactCouple c1 = exact_couple(b);
        CHECK(is_exact(c1));
        CHECK(couple_page(c1) == page(b, 1));
        const ExactCouple c2 = derive(c1);
        CHECK(is_exact(c2));
        CHECK(couple_page(c2) == page(b, 2));
    }
}

TEST_CASE("i-chains stabilize")
{
    for (const auto& b : sample(Mode::Generic, 10, 31)) {
        const int extent = static_cast<int>(b.width() + b.height());
        ExactCouple c = exact_couple(b);
        for (int l = 1; l <= extent; ++l)
            c = derive(c);
        const ExactCouple next = derive(c);
        for (int m = 0; m < static_cast<int>(b.width()); ++m)
            for (int n = 0; n < static_cast<int>(b.height()); ++n) {
                CHECK(c.dim_d(m, n) == next.dim_d(m, n));
                CHECK(c.dim_e(m, n) == e_infinity(b).dim(m, n));
            }
    }
}

TEST_CASE("k2 vanishing criteria")
{
    std::size_t zero_hits = 0;
    std::size_t injective_hits = 0;
    for (const auto& b : sample(Mode::Generic, 200, 4242)) {
        const ExactCouple c2 = derive(exact_couple(b));
        const linalg::Field& f = b.field();
        for (int m = 0; m < static_cast<int>(b.width()); ++m)
            for (int n = 0; n < static_cast<int>(b.height()); ++n) {
                if (b.dim(m, n) == 0)
                    continue;
                if (n >= 1 && b.d0(m + 1, n - 1).is_zero()) {
                    ++zero_hits;
                    CHECK(k2_is_zero(c2, m, n));
                }
                if (n >= 1 && m + 2 < static_cast<int>(b.width()) && linalg::is_injective(f, b.d0(m + 2, n - 1))) {
                    ++injective_hits;
                    CHECK(k2_is_zero(c2, m, n));
                }
            }
    }
    CHECK(zero_hits > 0);
    CHECK(injective_hits > 0);

    const ExactCouple w2 = derive(exact_couple(witness()));
    CHECK_FALSE(k2_is_zero(w2, 0, 1));
    CHECK_THROWS(k2_is_zero(exact_couple(witness()), 0, 1));
}

TEST_CASE("collapse under the hypotheses")
{
    for (auto mode : {Mode::AllD0Zero, Mode::AllD0Injective})
        for (const auto& b : sample(mode, 100, 55)) {
            const auto report = check_collapse(b);
            CHECK(report.hypothesis != CollapseReport::Hypothesis::None);
            CHECK(report.passed());
        }
}

TEST_CASE("generator")
{
    const Shape shape{4, 3, 4};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Bicomplex z = random_bicomplex(seed, shape, Mode::AllD0Zero);
        CHECK(validate(z).ok());
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 3; ++n)
                CHECK(z.d0(m, n).is_zero());
        CHECK(validate(random_bicomplex(seed, shape, Mode::Generic)).ok());
        CHECK(validate(random_bicomplex(seed, shape, Mode::AllD0Injective)).ok());
        CHECK(random_bicomplex(seed, shape, Mode::Generic) == random_bicomplex(seed, shape, Mode::Generic));
    }
    CHECK_FALSE(random_bicomplex(1, shape, Mode::Generic) == random_bicomplex(2, shape, Mode::Generic));
    CHECK_THROWS_AS(random_bicomplex(0, Shape{9, 2, 3}, Mode::Generic), std::invalid_argument);
    CHECK_THROWS_AS(random_bicomplex(0, Shape{2, 2, 7}, Mode::Generic), std::invalid_argument);
    CHECK(parse_mode(to_string(Mode::AllD0Injective)) == Mode::AllD0Injective);
}
