#include <doctest.h>

#include "secrefine/finding.hpp"

using namespace secrefine;

namespace {
Finding f(int cwe, int line, std::string rule = "r", FindingSource src = FindingSource::builtin) {
    Finding x;
    x.cwe = CweId(cwe);
    x.file = "a.py";
    x.start_line = x.end_line = line;
    x.rule_id = std::move(rule);
    x.source = src;
    return x;
}
}  // namespace

TEST_CASE("dedup is order independent") {
    std::vector<Finding> a{f(89, 3), f(22, 1), f(89, 3), f(89, 3, "other")};
    std::vector<Finding> b{f(89, 3, "other"), f(89, 3), f(22, 1), f(89, 3)};
    dedup_findings(a);
    dedup_findings(b);
    REQUIRE(a.size() == 3);
    CHECK(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].identity() == b[i].identity());
}

TEST_CASE("record CWE set and diff") {
    AnalysisRecord r;
    r.findings = {f(798, 1), f(798, 2), f(209, 9)};
    CHECK(to_string(r.cwes()) == "{209,798}");

    auto d = diff_findings(CweSet{CweId(22), CweId(89)}, CweSet{CweId(89), CweId(79)});
    CHECK(d.persisting == CweSet{CweId(89)});
    CHECK(d.removed == CweSet{CweId(22)});
    CHECK(d.introduced == CweSet{CweId(79)});
}

TEST_CASE("finding and record JSON round-trip") {
    AnalysisRecord r;
    r.sample_key = "m/raw/python/scenario_1/sample_0";
    r.findings = {f(22, 4, "py/path", FindingSource::external_sarif)};
    r.suppressed = {f(798, 8)};
    r.analyzer_versions = {{"builtin", "builtin@1.0.0"}};
    r.warnings = {"w"};
    auto back = record_from_json(to_json(r));
    CHECK(back.sample_key == r.sample_key);
    REQUIRE(back.findings.size() == 1);
    CHECK(back.findings[0].cwe == CweId(22));
    CHECK(back.findings[0].source == FindingSource::external_sarif);
    CHECK(back.suppressed.size() == 1);
    CHECK(back.analyzer_versions == r.analyzer_versions);
    CHECK(back.warnings == r.warnings);
    CHECK(parse_finding_source(to_string(FindingSource::manual_override)) == FindingSource::manual_override);
}
