#include <doctest.h>

#include <algorithm>
#include <random>

#include <json.hpp>

#include "secrefine/severity.hpp"
#include "support.hpp"

using namespace secrefine;

namespace {

SeverityTable small_table() {
    return SeverityTable({{CweId(78), {9.8, "a"}}, {CweId(209), {5.4, "b"}}, {CweId(22), {7.5, "c"}}});
}

Finding f(int cwe) {
    Finding x;
    x.cwe = CweId(cwe);
    return x;
}

AnalysisRecord rec(std::vector<int> cwes) {
    AnalysisRecord r;
    for (int c : cwes) r.findings.push_back(f(c));
    return r;
}

}  // namespace

TEST_CASE("table parsing and lookup") {
    auto t = SeverityTable::load(testsupport::data_dir() / "severity/default_table.json");
    CHECK(t.lookup(CweId(78)) == doctest::Approx(9.8));
    CHECK_THROWS_WITH_AS(t.lookup(CweId(99999)), "CWE-99999 is absent from the severity table", SeverityError);

    using nlohmann::json;
    CHECK_THROWS_AS(SeverityTable::parse(json{{"entries", {{{"cwe", "CWE-1"}, {"score", 11.0}}}}}), SeverityError);
    CHECK_THROWS_AS(SeverityTable::parse(json{{"entries", {{{"cwe", "CWE-1"}, {"score", 1.0}},
                                                           {{"cwe", "1"}, {"score", 2.0}}}}}),
                    SeverityError);
}

TEST_CASE("totals in multiset and set mode") {
    auto t = small_table();
    std::vector<Finding> fs{f(78), f(78), f(209)};
    CHECK(total_severity(fs, t) == doctest::Approx(25.0));
    CHECK(total_severity(fs, t, SeverityMode::set) == doctest::Approx(15.2));
    std::vector<Finding> none;
    CHECK(total_severity(none, t) == 0.0);
    std::vector<Finding> unknown{f(1)};
    CHECK_THROWS_AS(total_severity(unknown, t), SeverityError);
}

TEST_CASE("improvement conventions") {
    CHECK(*improvement_pct(10, 10) == 0.0);
    CHECK(*improvement_pct(10, 0) == 100.0);
    CHECK(*improvement_pct(0, 0) == 0.0);
    CHECK_FALSE(improvement_pct(0, 3).has_value());
    CHECK(*improvement_pct(10, 15) == doctest::Approx(-50.0));
    CHECK_THROWS_AS(improvement_pct(-1, 0), SeverityError);
}

TEST_CASE("improvement never exceeds 100") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(0.0, 500.0);
    for (int i = 0; i < 500; ++i) {
        double raw = d(rng) + 1e-6, refined = d(rng);
        CHECK(*improvement_pct(raw, refined) <= 100.0);
    }
}

TEST_CASE("aggregates and compare") {
    auto t = small_table();
    std::vector<AnalysisRecord> raw{rec({78, 209}), rec({}), rec({22})};
    std::vector<AnalysisRecord> refined{rec({209}), rec({}), rec({})};
    auto a = aggregate_records(raw, t);
    CHECK(a.total_severity == doctest::Approx(22.7));
    CHECK(a.finding_instances == 3);
    CHECK(a.vulnerable_samples == 2);
    CHECK(a.samples == 3);
    auto b = aggregate_records(refined, t);
    auto r = compare("m", Language::go, Technique::cot, a, b);
    CHECK(*r.severity_pct == doctest::Approx((22.7 - 5.4) / 22.7 * 100));
    CHECK(*r.count_pct == doctest::Approx(200.0 / 3));
    CHECK(*r.vulnerable_samples_pct == doctest::Approx(50.0));
}

TEST_CASE("group means skip undefined members and count them") {
    std::vector<ImprovementResult> rs;
    auto add = [&](std::string m, Language l, Technique t, std::optional<double> v) {
        ImprovementResult r;
        r.model_id = std::move(m);
        r.language = l;
        r.technique = t;
        r.severity_pct = v;
        rs.push_back(r);
    };
    add("x", Language::python, Technique::nep, 10);
    add("x", Language::java, Technique::nep, std::nullopt);
    add("x", Language::go, Technique::nep, 20);
    add("y", Language::python, Technique::nep, std::nullopt);
    auto rows = aggregate_improvements(rs, GroupBy::model, Metric::severity);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].group == "x");
    CHECK(*rows[0].mean.at(Technique::nep) == doctest::Approx(15.0));
    CHECK(rows[0].undefined.at(Technique::nep) == 1);
    CHECK_FALSE(rows[1].mean.at(Technique::nep).has_value());
    std::vector<ImprovementResult> empty;
    CHECK_THROWS_AS(aggregate_improvements(empty, GroupBy::model, Metric::severity), SeverityError);
}

TEST_CASE("fixed-point rendering") {
    CHECK(format_value(33.75) == "33.75");
    CHECK(format_value(23.5) == "23.50");
    CHECK(format_value(-0.001) == "0.00");
    CHECK(format_value(std::nullopt) == "N/A");
    CHECK(format_value(2.0 / 3.0, 3) == "0.667");
}

TEST_CASE("percentile is monotone in each element") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(0.0, 9.0);
    for (int i = 0; i < 100; ++i) {
        std::vector<double> v(1 + rng() % 12);
        for (auto& x : v) x = d(rng);
        double before = percentile_severity(v);
        v[rng() % v.size()] += 1.0;
        CHECK(percentile_severity(v) >= before - 1e-12);
    }
    std::vector<double> empty;
    CHECK_THROWS_AS(percentile_severity(empty), SeverityError);
    std::vector<double> bad{11.0};
    CHECK_THROWS_AS(percentile_severity(bad), SeverityError);
}
