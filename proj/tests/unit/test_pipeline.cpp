#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "secrefine/config.hpp"
#include "secrefine/io.hpp"
#include "secrefine/manifest.hpp"
#include "secrefine/pipeline.hpp"
#include "support.hpp"

using namespace secrefine;
using nlohmann::json;
using testsupport::TempDir;
namespace fs = std::filesystem;

namespace {

// Demo configuration cut down to one model, two techniques and Python.
RunConfig small_config(const fs::path& out, const fs::path& severity = {}) {
    std::ifstream in(testsupport::source_dir() / "configs/replay_demo.json");
    auto doc = json::parse(in);
    doc["plan"]["models"] = {"mock-alpha"};
    doc["plan"]["techniques"] = {"raw", "cot"};
    doc["plan"]["languages"] = {"python"};
    doc["plan"]["scenarios"] = {1, 2, 3, 4};
    doc.erase("overrides");
    doc["output_root"] = out.string();
    if (!severity.empty()) doc["severity_table"] = severity.string();
    return parse_config(doc, testsupport::source_dir() / "configs");
}

int skipped(const std::vector<StageOutcome>& outcomes) {
    int n = 0;
    for (const auto& o : outcomes) n += o.skipped;
    return n;
}

}  // namespace

TEST_CASE("stage names") {
    for (auto s : kAllStages) CHECK(parse_stage(to_string(s)) == s);
    CHECK_THROWS(parse_stage("deploy"));
}

TEST_CASE("scoring before analysis names the missing input") {
    TempDir dir("pipe");
    auto c = small_config(dir.path());
    std::ostringstream log;
    CHECK_THROWS_WITH_AS(run_pipeline(c, {{Stage::score}, false, false}, log),
                         doctest::Contains("missing analysis records"), StageError);
    CHECK_THROWS_WITH_AS(run_pipeline(c, {{Stage::analyze}, false, false}, log),
                         doctest::Contains("missing generated samples"), StageError);
}

TEST_CASE("full run, no-op rerun, refusal on changed inputs") {
    TempDir dir("pipe");
    fs::copy_file(testsupport::data_dir() / "severity/default_table.json", dir / "sev.json");
    auto c = small_config(dir / "out", dir / "sev.json");
    std::ostringstream log;

    auto first = run_pipeline(c, {}, log);
    CHECK(first.size() == 5);
    CHECK(skipped(first) == 0);
    CHECK(fs::exists(c.report_dir() / "index.json"));
    CHECK(fs::exists(c.report_dir() / "tables/improvement_by_model_severity.md"));
    auto m = RunManifest::load(c.manifest_path());
    CHECK(m.stages.size() == 5);
    CHECK(m.cells.size() == 8);
    CHECK(m.sampling["sampling"]["temperature"] == "0.2");
    CHECK(m.sampling["scenarios"].size() == 4);

    auto second = run_pipeline(c, {}, log);
    CHECK(skipped(second) == 5);

    // A severity table edit invalidates downstream stages.
    auto doc = json::parse(io::read_file(dir / "sev.json"));
    doc["entries"][0]["score"] = 1.0;
    io::write_file_atomic(dir / "sev.json", doc.dump(2));
    CHECK_THROWS_WITH_AS(run_pipeline(c, {}, log), doctest::Contains("severity_table"), StageError);

    auto forced = run_pipeline(c, {{std::begin(kAllStages), std::end(kAllStages)}, false, true}, log);
    REQUIRE(forced.size() == 5);
    CHECK(forced[0].skipped);
    CHECK(forced[1].skipped);
    CHECK_FALSE(forced[2].skipped);
    CHECK(skipped(run_pipeline(c, {}, log)) == 5);
}

TEST_CASE("report stage alone needs earlier outputs") {
    TempDir dir("pipe");
    auto c = small_config(dir.path());
    std::ostringstream log;
    CHECK_THROWS_AS(run_pipeline(c, {{Stage::report}, false, false}, log), StageError);
}

TEST_CASE("external findings are merged and out-of-range lines dropped") {
    auto pack = RulePack::load(testsupport::data_dir() / "rules/builtin_rules.json");
    Finding inside;
    inside.cwe = CweId(306);
    inside.file = "s.py";
    inside.start_line = inside.end_line = 2;
    inside.rule_id = "ext/auth";
    inside.source = FindingSource::external_sarif;
    auto beyond = inside;
    beyond.start_line = beyond.end_line = 50;
    std::vector<Finding> external{inside, beyond, inside};
    auto r = analyze_source("k", "x = 1\ny = 2\n", Language::python, "s.py", pack, external);
    REQUIRE(r.findings.size() == 1);
    CHECK(r.findings[0].cwe == CweId(306));
    CHECK(r.warnings.size() == 1);
    CHECK(r.analyzer_versions.at("builtin") == "builtin@1.0.0");
}

TEST_CASE("score and outcome helpers pair refined cells with raw") {
    auto rec = [](std::string key, std::vector<int> cwes) {
        AnalysisRecord r;
        r.sample_key = std::move(key);
        for (int c : cwes) {
            Finding f;
            f.cwe = CweId(c);
            f.file = r.sample_key;
            f.rule_id = "r";
            r.findings.push_back(f);
        }
        return r;
    };
    std::vector<AnalysisRecord> records{rec("m/raw/go/scenario_1/sample_0", {22}),
                                        rec("m/raw/go/scenario_1/sample_1", {}),
                                        rec("m/cot/go/scenario_1/sample_0", {79}),
                                        rec("m/cot/go/scenario_1/sample_1", {})};
    SeverityTable table({{CweId(22), {7.5, ""}}, {CweId(79), {6.1, ""}}});
    auto out = score_records(records, table);
    REQUIRE(out.cells.size() == 2);
    REQUIRE(out.improvements.size() == 1);
    CHECK(*out.improvements[0].severity_pct == doctest::Approx((7.5 - 6.1) / 7.5 * 100));
    CHECK(*out.improvements[0].count_pct == doctest::Approx(0.0));

    auto outcomes = cell_outcomes(out.cells);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].category == OutcomeCategory::fully_removed_and_introduced);
    CHECK(outcomes[0].introduced_cwes == CweSet{CweId(79)});
}
