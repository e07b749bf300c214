#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2ext/grothendieck.hpp"

using namespace sl2ext;
using grothendieck::CharacterTables;
using grothendieck::FactorList;

TEST_CASE("Clebsch-Gordan factors")
{
    CHECK(grothendieck::good_filtration_factors(2, 3) == FactorList{{5, 1}, {3, 1}, {1, 1}});
    CHECK(grothendieck::good_filtration_factors(1, 0) == FactorList{{1, 1}});
    CHECK(grothendieck::good_filtration_factors(0, 4) == FactorList{{4, 1}});
    // dimension count: (a+1)(b+1)
    for (Weight a = 0; a < 12; ++a)
        for (Weight b = a ? a - 1 : 0; b < 15; ++b) {
            Weight total = 0;
            for (auto [w, mult] : grothendieck::good_filtration_factors(a, b))
                total += (w + 1) * mult;
            CHECK(total == (a + 1) * (b + 1));
        }
}

TEST_CASE("Weyl modules in simples")
{
    const CharacterTables p3(WeightContext::characteristic(3));
    const CharacterTables p2(WeightContext::characteristic(2));
    auto row = p3.weyl_in_simples(3);
    CHECK(row.entries == std::map<Weight, std::int64_t>{{3, 1}, {1, 1}});
    CHECK(p2.weyl_in_simples(2).entries == std::map<Weight, std::int64_t>{{2, 1}, {0, 1}});
    for (Weight lambda = 0; lambda <= 2; ++lambda)
        CHECK(p3.weyl_in_simples(lambda).entries == std::map<Weight, std::int64_t>{{lambda, 1}});

    CHECK(p3.simple_dimension(3) == 2);
    CHECK(p3.simple_dimension(1) == 2);
    // dim Delta = sum of composition factor dims
    for (Weight lambda = 0; lambda < 120; ++lambda) {
        Weight total = 0;
        for (auto [mu, c] : p3.weyl_in_simples(lambda).entries)
            total += static_cast<Weight>(c) * p3.simple_dimension(mu);
        CHECK(total == lambda + 1);
    }
}

TEST_CASE("simples in Weyl modules invert the decomposition matrix")
{
    const CharacterTables p3(WeightContext::characteristic(3));
    CHECK(p3.simple_in_weyls(3).entries == std::map<Weight, std::int64_t>{{3, 1}, {1, -1}});
    CHECK(p3.simple_in_weyls(2).entries == std::map<Weight, std::int64_t>{{2, 1}});

    for (Weight lambda = 0; lambda < 60; ++lambda) {
        std::map<Weight, std::int64_t> composed;
        for (auto [mu, c] : p3.simple_in_weyls(lambda).entries)
            for (auto [nu, d] : p3.weyl_in_simples(mu).entries)
                composed[nu] += c * d;
        std::erase_if(composed, [](const auto& e) { return e.second == 0; });
        CHECK(composed == std::map<Weight, std::int64_t>{{lambda, 1}});
    }
}

TEST_CASE("Euler characteristics")
{
    const CharacterTables p3(WeightContext::characteristic(3));
    CHECK(grothendieck::euler_weyl_weyl(7, 7) == 1);
    CHECK(grothendieck::euler_weyl_weyl(1, 7) == 0);
    CHECK(p3.euler_weyl_simple(4, 4) == 1);
    CHECK(p3.euler_weyl_simple(1, 3) == -1);
    CHECK(p3.euler_weyl_simple(3, 1) == 0);
    CHECK(p3.euler_weyl_simple(0, 1) == 0);
}

TEST_CASE("tilting characters")
{
    const CharacterTables p5(WeightContext::characteristic(5));
    const CharacterTables p3(WeightContext::characteristic(3));
    CHECK(p5.tilting_weyl_multiplicities(6) == FactorList{{6, 1}, {2, 1}});
    CHECK(p5.tilting_weyl_multiplicities(3) == FactorList{{3, 1}});
    CHECK(p3.tilting_weyl_multiplicities(5) == FactorList{{5, 1}});

    for (Weight lambda = 0; lambda < 150; ++lambda) {
        Weight total = 0;
        for (auto [mu, c] : p3.tilting_weyl_multiplicities(lambda))
            total += c * (mu + 1);
        CHECK(total == p3.tilting_dimension(lambda));
    }
}

TEST_CASE("tables reject characteristic zero")
{
    CHECK_THROWS(CharacterTables(WeightContext::semisimple()));
}
