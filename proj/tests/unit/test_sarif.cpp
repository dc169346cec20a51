#include <doctest.h>

#include <json.hpp>

#include "secrefine/io.hpp"
#include "secrefine/sarif.hpp"
#include "support.hpp"

using namespace secrefine;
using nlohmann::json;

namespace {

json result(const std::string& rule, const std::string& uri, int line) {
    return {{"ruleId", rule},
            {"message", {{"text", "m"}}},
            {"locations",
             {{{"physicalLocation", {{"artifactLocation", {{"uri", uri}}}, {"region", {{"startLine", line}}}}}}}}};
}

json log_with(json rules, json results) {
    return {{"version", "2.1.0"},
            {"runs", {{{"tool", {{"driver", {{"name", "Tool"}, {"version", "3.1"}, {"rules", rules}}}}},
                       {"results", results}}}}};
}

}  // namespace

TEST_CASE("cwe tags") {
    CHECK(cwe_from_tag("external/cwe/cwe-079") == CweId(79));
    CHECK(cwe_from_tag("external/cwe/cwe-1333") == CweId(1333));
    CHECK_FALSE(cwe_from_tag("security").has_value());
    CHECK_FALSE(cwe_from_tag("external/cwe/cwe-").has_value());
}

TEST_CASE("seven-result fixture") {
    auto doc = io::read_file(testsupport::data_dir() / "fixtures/sarif/seven_results.sarif");
    auto in = ingest_sarif(doc);
    CHECK(in.findings.size() == 6);
    CHECK(in.unmapped_results == 1);
    CHECK(in.tools.at("CodeQL") == "2.20.1");
}

TEST_CASE("uri normalization and prefixing") {
    json rules = {{{"id", "x"}, {"properties", {{"tags", {"external/cwe/cwe-089"}}}}}};
    auto doc = log_with(rules, {result("x", "file:///abs/a.py", 1), result("x", "./b.py", 2),
                                result("x", "c.py", 3), result("x", "sub/d.py", 4)})
                   .dump();
    auto in = ingest_sarif(doc, {}, "m/raw/python/scenario_1");
    REQUIRE(in.findings.size() == 4);
    std::set<std::string> files;
    for (const auto& f : in.findings) files.insert(f.file);
    CHECK(files.count("m/raw/python/scenario_1/b.py"));
    CHECK(files.count("m/raw/python/scenario_1/c.py"));
    CHECK(files.count("sub/d.py"));
    for (const auto& f : in.findings) CHECK(f.source == FindingSource::external_sarif);
}

TEST_CASE("mapping covers untagged rules") {
    json rules = {{{"id", "custom/auth"}}};
    auto doc = log_with(rules, {result("custom/auth", "a.go", 7)}).dump();
    CHECK(ingest_sarif(doc).unmapped_results == 1);
    auto in = ingest_sarif(doc, {{"custom/auth", CweId(306)}});
    REQUIRE(in.findings.size() == 1);
    CHECK(in.findings[0].cwe == CweId(306));
    CHECK(in.findings[0].start_line == 7);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(ingest_sarif("not json"), SarifError);
    CHECK_THROWS_AS(ingest_sarif(R"({"version":"2.1.0"})"), SarifError);
}
