#include <doctest.h>

#include <json.hpp>

#include "secrefine/report.hpp"
#include "support.hpp"

using namespace secrefine;

namespace {

ImprovementResult result(std::string model, Language lang, Technique t, std::optional<double> sev) {
    ImprovementResult r;
    r.model_id = std::move(model);
    r.language = lang;
    r.technique = t;
    r.severity_pct = r.count_pct = r.vulnerable_samples_pct = sev;
    return r;
}

std::string cell(const Table& t, std::size_t row, const std::string& col) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == col) return t.rows.at(row).at(i);
    FAIL("no column " << col);
    return {};
}

}  // namespace

TEST_CASE("improvement table by model") {
    std::vector<ImprovementResult> rs{result("gpt", Language::python, Technique::nep, 16),
                                      result("gpt", Language::javascript, Technique::nep, 31),
                                      result("gpt", Language::java, Technique::nep, 37),
                                      result("gpt", Language::go, Technique::nep, 51),
                                      result("gpt", Language::go, Technique::cot, std::nullopt)};
    auto t = improvement_table(rs, GroupBy::model, Metric::severity);
    CHECK(t.name == "improvement_by_model_severity");
    CHECK(t.metric == "severity-based improvement (%)");
    CHECK(t.columns == std::vector<std::string>{"Model", "Language", "NEP", "CoT", "MP", "FT"});
    REQUIRE(t.rows.size() == 5);
    CHECK(cell(t, 0, "NEP") == "16.00");
    CHECK(cell(t, 0, "MP") == "N/A");
    CHECK(cell(t, 3, "CoT") == std::string(kUndefined));
    CHECK(t.rows[4][1] == "Average");
    CHECK(cell(t, 4, "NEP") == "33.75");

    bool na_note = false, undefined_note = false;
    for (const auto& n : t.notes) {
        na_note |= n.find("N/A") != std::string::npos;
        undefined_note |= n.find(std::string(kUndefined)) != std::string::npos;
    }
    CHECK(na_note);
    CHECK(undefined_note);
}

TEST_CASE("complete tables carry no N/A note") {
    std::vector<ImprovementResult> rs;
    for (auto t : {Technique::nep, Technique::cot, Technique::mp, Technique::ft})
        rs.push_back(result("m", Language::go, t, 10));
    auto t = improvement_table(rs, GroupBy::language, Metric::finding_instances);
    CHECK(t.columns[0] == "Language");
    for (const auto& n : t.notes) CHECK(n.find("N/A") == std::string::npos);
}

TEST_CASE("renderers") {
    Table t{"x", "A title", "metric", {"Name", "Value"}, {{"a,b", "1.00"}, {"c\"d", "-2.50"}}, {"a note"}};
    CHECK(render_csv(t) == "Name,Value\n\"a,b\",1.00\n\"c\"\"d\",-2.50\n");
    auto md = render_markdown(t);
    CHECK(md.find("## A title") != std::string::npos);
    CHECK(md.find("Metric: metric") != std::string::npos);
    CHECK(md.find("---:") != std::string::npos);
    CHECK(md.find("- a note") != std::string::npos);
    auto j = nlohmann::json::parse(render_json(t));
    CHECK(j["columns"].size() == 2);
    CHECK(j["rows"][1][0] == "c\"d");
}

TEST_CASE("heatmap grids") {
    AssociationMatrix one;
    one.rows = {CweId(22)};
    one.cols = {CweId(79)};
    one.cells = {{{CweId(22), CweId(79), 1.0, 4}}};
    CHECK(render_heatmap(one) == "original\\introduced,CWE-79\nCWE-22,1.00\n");

    // Zero-margin tables render as 0.00.
    AssociationMatrix flat;
    flat.rows = {CweId(22), CweId(89)};
    flat.cols = {CweId(79)};
    flat.cells = {{{CweId(22), CweId(79), 0.0, 2}}, {{CweId(89), CweId(79), 0.0, 2}}};
    CHECK(render_heatmap(flat) == "original\\introduced,CWE-79\nCWE-22,0.00\nCWE-89,0.00\n");

    std::vector<NetworkEdge> edges{{CweId(22), CweId(79), 3}};
    CHECK(render_edges(edges) == "source,target,weight\nCWE-22,CWE-79,3\n");
}

TEST_CASE("category table") {
    DistributionRow r;
    r.model_id = "m";
    r.technique = Technique::cot;
    r.cells = 3;
    r.vacuous_removals = 1;
    for (auto c : kAllCategories) {
        r.counts[c] = 0;
        r.percent[c] = 0;
    }
    r.percent[OutcomeCategory::fully_removed] = 100.0 / 3;
    r.percent[OutcomeCategory::no_cwes] = 200.0 / 3;
    std::vector<DistributionRow> rows{r};
    auto t = category_table(rows);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.columns.size() == 10);
    CHECK(cell(t, 0, std::string(display_name(OutcomeCategory::fully_removed))) == "33.33");
    CHECK(cell(t, 0, "Technique") == "CoT");
}

TEST_CASE("raw frequency table") {
    CellScore a{{"m", Technique::raw, Language::go, 1}, {}, {}, {{CweId(22), 2}}};
    CellScore b{{"m", Technique::raw, Language::python, 2}, {}, {}, {{CweId(22), 1}, {CweId(89), 4}}};
    CellScore c{{"m", Technique::cot, Language::python, 2}, {}, {}, {{CweId(89), 9}}};
    std::vector<CellScore> cells{a, b, c};
    auto t = raw_frequency_table(cells, GroupBy::language);
    CHECK(t.columns.front() == "CWE");
    CHECK(t.columns.back() == "Total");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == "CWE-22");
    CHECK(t.rows[0].back() == "3");
    CHECK(t.rows[1].back() == "4");
}
