#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "sl2ext/cache.hpp"

using namespace sl2ext;
using FM = FormalModule;

namespace {

void warm(const ExtEngine& e, Weight max_weight)
{
    for (Weight lambda = 0; lambda <= max_weight; ++lambda)
        for (Weight mu = 0; mu <= max_weight; ++mu) {
            e.query(FM::weyl(lambda), FM::weyl(mu));
            e.query(FM::weyl(lambda), FM::simple(mu));
        }
}

std::string dump(const ExtEngine& e)
{
    std::ostringstream out;
    cache::export_records(out, e);
    return out.str();
}

}  // namespace

TEST_CASE("record lines")
{
    CHECK(cache::record_line({"weyl-weyl|W(1)|W(7)|p3", {0, 1, 1}}) ==
          R"({"version":"sl2ext-engine-1","key":"weyl-weyl|W(1)|W(7)|p3","dims":[0,1,1]})");
}

TEST_CASE("empty engine exports nothing")
{
    const ExtEngine e(WeightContext::characteristic(3));
    CHECK(dump(e).empty());
}

TEST_CASE("export and import round trip")
{
    const ExtEngine warmed(WeightContext::characteristic(3));
    warm(warmed, 20);
    const std::string text = dump(warmed);
    CHECK_FALSE(text.empty());

    const ExtEngine fresh(WeightContext::characteristic(3));
    std::istringstream in(text);
    const auto report = cache::import_records(in, fresh, true);
    CHECK(report.warning_count() == 0);
    CHECK(report.imported == warmed.memo_size());
    CHECK(dump(fresh) == text);

    for (Weight lambda = 0; lambda <= 20; ++lambda)
        for (Weight mu = 0; mu <= 20; ++mu)
            CHECK(fresh.query(FM::weyl(lambda), FM::weyl(mu)) == warmed.query(FM::weyl(lambda), FM::weyl(mu)));

    // a second import changes nothing
    std::istringstream again(text);
    cache::import_records(again, fresh);
    CHECK(dump(fresh) == text);
}

TEST_CASE("bad records are skipped with warnings")
{
    const std::string good = cache::record_line({"weyl-weyl|W(1)|W(7)|p3", {0, 1, 1}});
    const std::string tampered = cache::record_line({"weyl-weyl|W(1)|W(7)|p3", {0, 2, 1}});
    const std::string old = R"({"version":"sl2ext-engine-0","key":"weyl-weyl|W(1)|W(7)|p3","dims":[0,1,1]})";
    const std::string foreign = cache::record_line({"weyl-weyl|W(1)|W(11)|p5", {0, 1, 1}});

    {
        const ExtEngine e(WeightContext::characteristic(3));
        std::istringstream in(tampered + "\n");
        const auto report = cache::import_records(in, e, true);
        CHECK(report.rejected == 1);
        CHECK(e.memo_size() == 0);
        CHECK(e.query(FM::weyl(1), FM::weyl(7)).dims == std::vector<std::uint64_t>{0, 1, 1});
    }
    {
        const ExtEngine e(WeightContext::characteristic(3));
        std::istringstream in("{not json\n" + old + "\n" + foreign + "\n" + good + "\n");
        const auto report = cache::import_records(in, e);
        CHECK(report.corrupt == 1);
        CHECK(report.version_mismatch == 1);
        CHECK(report.foreign == 1);
        CHECK(report.imported == 1);
        CHECK(report.warnings.size() == 3);
    }
}
