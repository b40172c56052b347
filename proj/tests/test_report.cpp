#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqmaps/report.hpp"

using namespace eqmaps;
using report::case_result;
using report::report_document;

TEST_CASE("report schema is stable and summary counts are derived")
{
    report_document doc;
    doc.command = "demo";
    doc.params["T"] = "40";
    doc.add({"zeta", {{"route_a", "1"}, {"route_b", "1"}}, true});
    doc.add({"alpha", {{"route_a", "2"}, {"route_b", "3"}}, false});
    doc.sort_canonical();

    CHECK(doc.results[0].case_id == "alpha");
    CHECK(doc.checked() == 2);
    CHECK(doc.passed() == 1);
    CHECK(doc.failed() == doc.checked() - doc.passed());
    CHECK_FALSE(doc.all_passed());

    const auto j = doc.to_json();
    CHECK(j["command"] == "demo");
    CHECK(j["summary"]["checked"] == 2);
    CHECK(j["summary"]["failed"] == 1);
    for (const auto& entry : j["results"]) {
        CHECK(entry.contains("case_id"));
        CHECK(entry.contains("route_values"));
        CHECK(entry.contains("verdict"));
    }

    const std::string text = doc.to_text();
    CHECK(text.find("[FAIL] alpha") != std::string::npos);
    CHECK(text.find("[ok]   zeta") != std::string::npos);
}

TEST_CASE("partitions serialise as arrays of 1-based index arrays")
{
    const auto j = report::partition_json({{1, 2}, {3, 4}});
    CHECK(j.dump() == "[[1,2],[3,4]]");
}

TEST_CASE("closed forms serialise as integer coefficient arrays")
{
    const series::rational_expr e({bigint(1), bigint(0), bigint(0), bigint(1)},
                                  {bigint(1), bigint(0), bigint(-1)});
    const auto j = report::closed_form_json(e);
    CHECK(j.dump() == R"({"den":[1,0,-1],"num":[1,0,0,1]})");
}
