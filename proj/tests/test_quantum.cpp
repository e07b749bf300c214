#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2ext/quantum.hpp"

using namespace sl2ext;
using namespace sl2ext::quantum;
using FM = FormalModule;
using Dims = std::vector<std::uint64_t>;

TEST_CASE("GL2 weights")
{
    CHECK(GL2Weight::parse("3,1") == GL2Weight{3, 1});
    CHECK(GL2Weight::parse("-1,-4").sl2() == 3);
    CHECK(GL2Weight{5, 2}.to_string() == "(5,2)");
    CHECK_THROWS_AS(GL2Weight::parse("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(GL2Weight::parse("3"), std::invalid_argument);
    CHECK_THROWS_AS(GL2Weight::parse("a,b"), std::invalid_argument);
}

TEST_CASE("classical GL2 reduces to SL2")
{
    const QuantumEngine q({5, 5});
    const ExtEngine e5(WeightContext::characteristic(5));
    CHECK(q.classical_gl2_ext({3, 1}, {2, 2}) == e5.query(FM::weyl(2), FM::weyl(0)));
    CHECK(q.classical_gl2_ext({3, 0}, {2, 2}).is_zero());
    CHECK(q.classical_gl2_ext({4, 3}, {10, -3}).dims == e5.query(FM::weyl(1), FM::weyl(13)).dims);

    const QuantumEngine q0({5, 0});
    CHECK(q0.classical_gl2_ext({2, 1}, {2, 1}).dims == Dims{1});
    CHECK(q0.classical_gl2_ext({3, 0}, {2, 1}).is_zero());
}

TEST_CASE("quantum Weyl to Weyl")
{
    const QuantumEngine q({3, 0});
    CHECK(q.qext_weyl_weyl({4, 1}, {4, 1}).dims == Dims{1});
    // d = l: lhs (i+d, d), rhs (2l+i, 0)
    CHECK(q.qext_weyl_weyl({4, 3}, {7, 0}).dims == Dims{0, 1, 1});
    CHECK(q.qext_weyl_weyl({4, 3}, {7, 0}) == q.tower().query(FM::weyl(1), FM::weyl(7)));
    CHECK(q.qext_weyl_weyl({4, 3}, {6, 0}).is_zero());
    CHECK(q.qext_weyl_weyl({5, 3}, {7, 0}).is_zero());

    const QuantumEngine q3({3, 3});
    CHECK(q3.qext_weyl_weyl({1, 0}, {7, 0}).is_zero());
}

TEST_CASE("Euler characteristic of quantum Weyl pairs")
{
    for (unsigned l : {2u, 3u, 5u})
        for (unsigned p : {0u, 2u, 3u}) {
            const QuantumEngine q({l, p});
            // (w, 0) against every dominant weight of the same degree, both ways
            for (std::int64_t w = 0; w < 24; ++w)
                for (std::int64_t w2 = 0; 2 * w2 <= w; ++w2) {
                    const GL2Weight top{w, 0};
                    const GL2Weight other{w - w2, w2};
                    const int expected = top == other ? 1 : 0;
                    CHECK(q.qext_weyl_weyl(other, top).euler() == expected);
                    CHECK(q.qext_weyl_weyl(top, other).euler() == expected);
                }
        }
}

TEST_CASE("twisted modules")
{
    const QuantumEngine q({3, 0});
    CHECK(q.qext_twist_vs_weyl(FM::trivial(), 1, 7).dims == Dims{0, 1, 1});
    CHECK(q.qext_twist_vs_weyl(FM::trivial(), 1, 4).is_zero());
    CHECK(q.qext_twist_vs_weyl(FM::weyl(1), 1, 4).dims == Dims{0, 0, 1});
    CHECK(q.qext_weyl_vs_twist(1, FM::trivial(), 1).dims == Dims{1});
    CHECK(q.qext_weyl_vs_twist(1, FM::induced(2), 1).dims == Dims{0, 0, 1});
}
