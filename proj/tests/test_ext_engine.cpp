#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "sl2ext/ext_engine.hpp"

using namespace sl2ext;
using FM = FormalModule;
using Dims = std::vector<std::uint64_t>;

namespace {

ExtEngine& engine(unsigned p)
{
    static ExtEngine e2(WeightContext::characteristic(2));
    static ExtEngine e3(WeightContext::characteristic(3));
    static ExtEngine e5(WeightContext::characteristic(5));
    return p == 2 ? e2 : p == 3 ? e3 : e5;
}

}  // namespace

TEST_CASE("module labels round-trip")
{
    for (const char* text : {"k", "W(7)", "I(3)", "S(12)", "T(9)", "P(S(2),1)", "P(W(4),0)"}) {
        CHECK(FM::parse(text).to_string() == text);
    }
    CHECK(FM::weyl(3).dual() == FM::induced(3));
    CHECK(FM::simple(3).dual() == FM::simple(3));
    CHECK_THROWS(FM::parse("W(x)"));
    CHECK_THROWS(FM::parse("Q(3)"));
}

TEST_CASE("normalization")
{
    const auto& e = engine(3);
    const auto dual = e.normalize(FM::induced(3), FM::induced(7));
    CHECK(dual.to_string() == e.normalize(FM::weyl(7), FM::weyl(3)).to_string());
    CHECK(dual.family == "weyl-weyl");

    // Delta(5) = Delta(1)^[1] (x) St and L(5) = L(1)^[1] (x) St at p = 3
    CHECK(e.normalize(FM::weyl(5), FM::simple(5)).to_string() == e.normalize(FM::weyl(1), FM::simple(1)).to_string());

    CHECK(e.normalize(FM::weyl(0), FM::weyl(1)).family == "zero");

    const auto key = e.normalize(FM::simple(4), FM::weyl(10));
    CHECK(QueryKey::from_string(key.to_string()).to_string() == key.to_string());
}

TEST_CASE("Weyl to Weyl")
{
    const auto& e = engine(3);
    CHECK(e.query(FM::weyl(0), FM::weyl(6)).at(2) == 1);
    CHECK(e.query(FM::weyl(1), FM::weyl(7)).dims == Dims{0, 1, 1});
    CHECK(e.query(FM::induced(7), FM::induced(1)).dims == Dims{0, 1, 1});
    CHECK(e.query(FM::weyl(7), FM::weyl(7)).dims == Dims{1});
    CHECK(e.query(FM::weyl(1), FM::weyl(25)).dims == Dims{0, 0, 1, 2, 1, 0, 0, 1, 1});
    CHECK(e.query(FM::weyl(1), FM::weyl(7)).cutoff == 3);

    for (Weight lambda = 0; lambda < 40; ++lambda)
        for (Weight mu = 0; mu < 40; ++mu) {
            const auto v = e.ext_weyl_weyl(lambda, mu);
            CHECK(v.euler() == (lambda == mu ? 1 : 0));
            CHECK(v.dims == e.ext_weyl_weyl_shift(lambda, mu).dims);
        }
}

TEST_CASE("max degree truncates")
{
    const auto& e = engine(3);
    CHECK(e.query(FM::weyl(1), FM::weyl(25), 3).dims == Dims{0, 0, 1, 2});
    CHECK(e.query(FM::weyl(1), FM::weyl(25), 1).dims.empty());
}

TEST_CASE("twisted source against a Weyl module")
{
    const auto& e = engine(5);
    CHECK(e.ext_twist_vs_weyl(FM::trivial(), 0, 0).dims == Dims{1});
    CHECK(e.ext_twist_vs_weyl(FM::trivial(), 1, 11).at(0) == 0);
    // L(1) is restricted, so it agrees with Weyl to Weyl
    for (Weight mu = 0; mu < 80; ++mu)
        CHECK(e.ext_twist_vs_weyl(FM::trivial(), 1, mu).dims == e.ext_weyl_weyl(1, mu).dims);
}

TEST_CASE("simple against Weyl and Weyl against simple")
{
    const auto& e = engine(3);
    // the socle of Delta(4) is L(0)
    CHECK(e.query(FM::simple(4), FM::weyl(4)).dims == Dims{0, 0, 1});
    CHECK(e.query(FM::simple(4), FM::induced(4)).dims == Dims{1});
    CHECK(e.query(FM::simple(0), FM::weyl(4)).dims == Dims{1, 1});
    CHECK(e.query(FM::simple(0), FM::weyl(1)).is_zero());
    CHECK(e.query(FM::simple(1), FM::weyl(3)).euler() == 0);
    CHECK(e.query(FM::weyl(4), FM::simple(4)).dims == Dims{1});
    for (Weight lambda = 0; lambda < 60; ++lambda)
        for (Weight mu = 0; mu < 60; ++mu)
            CHECK(e.query(FM::weyl(lambda), FM::simple(mu)).euler() == e.tables().euler_weyl_simple(lambda, mu));
}

TEST_CASE("twisted simples")
{
    const auto& e = engine(5);
    CHECK(e.ext_twist_vs_twist(0, 1, 0, 1).dims == Dims{1});
    CHECK(e.ext_twist_vs_twist(1, 1, 0, 2).at(1) == 1);
    CHECK(e.ext_twist_vs_twist(2, 1, 0, 1).at(2) == 1);
}

TEST_CASE("tilting against Weyl")
{
    const auto& e = engine(5);
    for (unsigned j = 0; j < 5; ++j)
        CHECK(e.ext_tilting_vs_weyl(j, j).dims == Dims{1});
    for (Weight a = 1; a < 6; ++a)
        CHECK(e.ext_tilting_vs_weyl(6, 5 * a + 1).dims == e.ext_weyl_weyl(0, a - 1).dims);
    CHECK(e.query(FM::tilting(6), FM::weyl(7)).is_zero());
}

TEST_CASE("vanishing bounds")
{
    const auto& e = engine(5);
    CHECK(e.vanishing_bound(FM::weyl(2), FM::weyl(16)) == 3);
    CHECK(e.vanishing_bound(FM::weyl(2), FM::induced(7)) == 0);
    CHECK(e.vanishing_bound(FM::simple(11), FM::weyl(17)) == 5);
}

TEST_CASE("unsupported pairs are reported")
{
    const auto& e = engine(3);
    CHECK_THROWS_AS(e.query(FM::simple(31), FM::simple(37)), UnsupportedFamily);
    // unlinked pairs are known zeros, not unsupported
    CHECK(e.query(FM::simple(100), FM::simple(200)).is_zero());
    CHECK(e.query(FM::simple(0), FM::simple(1)).is_zero());
}

TEST_CASE("huge weights stay exact")
{
    const auto& e = engine(2);
    constexpr Weight top = std::numeric_limits<Weight>::max();
    CHECK(e.query(FM::weyl(top), FM::weyl(top)).dims == Dims{1});
    CHECK(e.query(FM::weyl(top - 1), FM::weyl(top)).is_zero());
}

TEST_CASE("memo")
{
    ExtEngine e(WeightContext::characteristic(3));
    const auto v = e.query(FM::weyl(1), FM::weyl(7));
    const auto size = e.memo_size();
    CHECK(size > 0);
    CHECK(e.query(FM::induced(7), FM::induced(1)) == v);
    CHECK(e.memo_size() == size);

    ExtEngine cold(WeightContext::characteristic(3), EngineOptions{false});
    CHECK(cold.query(FM::weyl(1), FM::weyl(7)) == v);
    CHECK(cold.memo_size() == 0);
}

TEST_CASE("semisimple oracle")
{
    const SemisimpleOracle o;
    CHECK(o.ext(FM::weyl(3), FM::weyl(3)).dims == Dims{1});
    CHECK(o.ext(FM::weyl(3), FM::simple(5)).is_zero());
}
