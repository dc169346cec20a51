#include <doctest.h>

#include "secrefine/io.hpp"
#include "secrefine/overrides.hpp"
#include "support.hpp"

using namespace secrefine;
using testsupport::TempDir;

namespace {

Finding f(int cwe, int line) {
    Finding x;
    x.cwe = CweId(cwe);
    x.file = "s.py";
    x.start_line = x.end_line = line;
    x.rule_id = "r" + std::to_string(cwe);
    return x;
}

AnalysisRecord record() {
    AnalysisRecord r;
    r.sample_key = "m/raw/python/scenario_3/sample_0";
    r.findings = {f(798, 8), f(798, 9), f(209, 19)};
    return r;
}

OverrideEntry entry(OverrideAction a, Finding fd) {
    OverrideEntry e;
    e.sample_key = "m/raw/python/scenario_3/sample_0";
    e.action = a;
    e.finding = std::move(fd);
    e.reviewer = "rev";
    return e;
}

}  // namespace

TEST_CASE("suppress removes only the named finding") {
    OverrideLedger ledger({entry(OverrideAction::suppress, f(798, 8))});
    auto out = apply_overrides(record(), ledger);
    REQUIRE(out.findings.size() == 2);
    CHECK(out.findings[0].start_line != 8);
    REQUIRE(out.suppressed.size() == 1);
    CHECK(out.suppressed[0].start_line == 8);
}

TEST_CASE("add marks the finding as manual and application is idempotent") {
    OverrideLedger ledger({entry(OverrideAction::add, f(20, 3))});
    auto once = apply_overrides(record(), ledger);
    auto twice = apply_overrides(once, ledger);
    CHECK(once.findings.size() == 4);
    CHECK(twice.findings.size() == 4);
    bool manual = false;
    for (const auto& x : once.findings) manual |= x.cwe == CweId(20) && x.source == FindingSource::manual_override;
    CHECK(manual);
}

TEST_CASE("entries for other samples are ignored") {
    auto e = entry(OverrideAction::suppress, f(798, 8));
    e.sample_key = "other";
    auto out = apply_overrides(record(), OverrideLedger({e}));
    CHECK(out.findings.size() == 3);
}

TEST_CASE("mismatched entries are rejected") {
    CHECK_THROWS_WITH_AS(apply_overrides(record(), OverrideLedger({entry(OverrideAction::suppress, f(89, 1))})),
                         doctest::Contains("suppressed finding is not present"), LedgerError);
    CHECK_THROWS_WITH_AS(apply_overrides(record(), OverrideLedger({entry(OverrideAction::add, f(209, 19))})),
                         doctest::Contains("added finding already exists"), LedgerError);
}

TEST_CASE("ledger file append and load") {
    TempDir dir("ledger");
    auto path = dir / "o.jsonl";
    OverrideLedger::append(path, entry(OverrideAction::suppress, f(798, 8)));
    OverrideLedger::append(path, entry(OverrideAction::add, f(20, 3)));
    auto ledger = OverrideLedger::load(path);
    REQUIRE(ledger.entries().size() == 2);
    CHECK(ledger.entries()[1].line == 2);
    CHECK(ledger.entries()[1].action == OverrideAction::add);
    CHECK(ledger.for_sample("m/raw/python/scenario_3/sample_0").size() == 2);

    io::append_line(path, R"({"sample_key":"x","action":"remove","finding":{}})");
    CHECK_THROWS_WITH_AS(OverrideLedger::load(path), doctest::Contains("ledger line 3"), LedgerError);
}
