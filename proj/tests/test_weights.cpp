#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "sl2ext/weights.hpp"

using namespace sl2ext;

TEST_CASE("decompose splits off the residue")
{
    const auto p3 = WeightContext::characteristic(3);
    const auto p5 = WeightContext::characteristic(5);
    CHECK(decompose(7, p3) == PDecomp{7, 2, 1});
    CHECK(decompose(4, p5) == PDecomp{4, 0, 4});
    CHECK(decompose(0, p5) == PDecomp{0, 0, 0});
    for (Weight lambda = 0; lambda < 200; ++lambda) {
        const auto d = decompose(lambda, p5);
        CHECK(compose(d.a, d.i, p5) == lambda);
    }
}

TEST_CASE("bar is p - 2 - i and an involution")
{
    const auto p5 = WeightContext::characteristic(5);
    const auto p7 = WeightContext::characteristic(7);
    CHECK(bar(1, p5) == 2);
    CHECK(bar(3, p5) == 0);
    CHECK(bar(bar(2, p7), p7) == 2);
    CHECK(bar(0, WeightContext::characteristic(2)) == 0);
    CHECK_THROWS(bar(4, p5));
    CHECK(is_steinberg_residue(4, p5));
    CHECK(is_steinberg_weight(9, p5));
    CHECK_FALSE(is_steinberg_weight(8, p5));
}

TEST_CASE("linkage")
{
    const auto p3 = WeightContext::characteristic(3);
    CHECK(linked(1, 3, p3));
    CHECK_FALSE(linked(0, 1, p3));
    CHECK(linked(5, 11, p3));
    CHECK(linked(2, 20, p3));  // Steinberg, twists 0 and 6 linked
    CHECK_FALSE(linked(2, 8, p3));  // twists 0 and 2 are not
    CHECK_FALSE(linked(2, 4, p3));

    // symmetric and reflexive
    const auto p5 = WeightContext::characteristic(5);
    for (Weight x = 0; x < 60; ++x) {
        CHECK(linked(x, x, p5));
        for (Weight y = 0; y < 60; ++y)
            CHECK(linked(x, y, p5) == linked(y, x, p5));
    }
}

TEST_CASE("Weyl dimensions")
{
    CHECK(weyl_dimension(0) == 1);
    CHECK(weyl_dimension(6) == 7);
    CHECK(weyl_dimension(4) == 5);
}

TEST_CASE("restricted weights")
{
    const auto p5 = WeightContext::characteristic(5);
    CHECK(is_restricted(4, p5));
    CHECK_FALSE(is_restricted(5, p5));
}

TEST_CASE("contexts reject bad characteristics")
{
    CHECK_THROWS_AS(WeightContext::characteristic(4), std::invalid_argument);
    CHECK_THROWS_AS(WeightContext::characteristic(1), std::invalid_argument);
    CHECK_NOTHROW(WeightContext::quantum(4));
    CHECK_THROWS(WeightContext::semisimple().require_modular());
    CHECK_THROWS(decompose(3, WeightContext::semisimple()));
}

TEST_CASE("overflow is reported, not wrapped")
{
    constexpr Weight top = std::numeric_limits<Weight>::max();
    CHECK_THROWS_AS(checked_add(top, 1), WeightOverflow);
    CHECK_THROWS_AS(checked_mul(top / 2, 3), WeightOverflow);
    CHECK_THROWS_AS(weyl_dimension(top), WeightOverflow);
    CHECK_THROWS_AS(compose(top / 3, 2, WeightContext::characteristic(5)), WeightOverflow);
}
