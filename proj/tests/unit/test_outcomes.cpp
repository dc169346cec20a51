#include <doctest.h>

#include <random>

#include "secrefine/outcomes.hpp"

using namespace secrefine;

namespace {

CweSet set_of(std::initializer_list<int> ids) {
    CweSet s;
    for (int i : ids) s.insert(CweId(i));
    return s;
}

ScenarioCellOutcome outcome(std::string model, Technique t, int sid, CweSet orig, CweSet refined) {
    return make_outcome({std::move(model), t, Language::python, sid}, orig, refined);
}

AnalysisRecord rec(std::string key, std::vector<int> cwes) {
    AnalysisRecord r;
    r.sample_key = std::move(key);
    for (int c : cwes) {
        Finding f;
        f.cwe = CweId(c);
        r.findings.push_back(f);
    }
    return r;
}

}  // namespace

TEST_CASE("categorization examples") {
    CHECK(categorize({}, {}) == OutcomeCategory::no_cwes);
    CHECK(categorize(set_of({22}), {}) == OutcomeCategory::fully_removed);
    CHECK(categorize(set_of({22}), set_of({79})) == OutcomeCategory::fully_removed_and_introduced);
    CHECK(categorize(set_of({22, 89}), set_of({89})) == OutcomeCategory::partial_fix);
    CHECK(categorize(set_of({22, 89}), set_of({22, 89})) == OutcomeCategory::not_removed);
    CHECK(categorize(set_of({22}), set_of({22, 79})) == OutcomeCategory::not_removed_and_introduced);
    CHECK(categorize({}, set_of({79})) == OutcomeCategory::fully_removed_and_introduced);

    auto o = outcome("m", Technique::cot, 1, {}, set_of({79}));
    CHECK(o.vacuous_removal);
    CHECK(o.introduced_cwes == set_of({79}));
}

TEST_CASE("category names round-trip") {
    for (auto c : kAllCategories) CHECK(parse_category(to_string(c)) == c);
    CHECK_THROWS(parse_category("nope"));
}

TEST_CASE("cell sets union samples and reject mixed cells") {
    std::vector<AnalysisRecord> raw{rec("m/raw/python/scenario_1/sample_0", {22}),
                                    rec("m/raw/python/scenario_1/sample_1", {89, 22})};
    std::vector<AnalysisRecord> refined{rec("m/cot/python/scenario_1/sample_0", {}),
                                        rec("m/cot/python/scenario_1/sample_1", {79})};
    auto [orig, ref] = cell_cwe_sets(raw, refined);
    CHECK(orig == set_of({22, 89}));
    CHECK(ref == set_of({79}));

    std::vector<AnalysisRecord> mixed{rec("m/cot/python/scenario_2/sample_0", {})};
    CHECK_THROWS_AS(cell_cwe_sets(raw, mixed), OutcomeError);
    CHECK_THROWS_AS(cell_cwe_sets(raw, raw), OutcomeError);
}

TEST_CASE("distribution rows sum to 100") {
    std::vector<ScenarioCellOutcome> os{outcome("m", Technique::nep, 1, set_of({22}), {}),
                                        outcome("m", Technique::nep, 2, set_of({22}), set_of({22})),
                                        outcome("m", Technique::nep, 3, {}, {}),
                                        outcome("m", Technique::cot, 1, {}, set_of({79}))};
    auto rows = category_distribution(os);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].technique == Technique::nep);
    CHECK(rows[0].cells == 3);
    double sum = 0;
    for (auto c : kAllCategories) sum += rows[0].percent.at(c);
    CHECK(sum == doctest::Approx(100.0));
    CHECK(rows[0].percent.at(OutcomeCategory::fully_removed) == doctest::Approx(100.0 / 3));
    CHECK(rows[1].vacuous_removals == 1);
}

TEST_CASE("cramers v properties") {
    CHECK(cramers_v({10, 0, 0, 10}) == 1.0);
    CHECK(cramers_v({5, 5, 5, 5}) == 0.0);
    CHECK(cramers_v({6, 2, 2, 6}) == doctest::Approx(0.5));
    CHECK(cramers_v({3, 0, 4, 0}) == 0.0);  // zero column margin
    CHECK_THROWS_AS(cramers_v({0, 0, 0, 0}), OutcomeError);
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        Contingency2x2 t{long(rng() % 20), long(rng() % 20), long(rng() % 20), long(rng() % 20) + 1};
        double v = cramers_v(t);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        // Symmetric under transposition.
        CHECK(cramers_v({t.a, t.c, t.b, t.d}) == doctest::Approx(v));
    }
}

TEST_CASE("association matrix and edges") {
    std::vector<ScenarioCellOutcome> os{outcome("m", Technique::nep, 1, set_of({22}), set_of({79})),
                                        outcome("m", Technique::nep, 2, set_of({89}), set_of({89})),
                                        outcome("m", Technique::nep, 3, set_of({22}), set_of({79, 89}))};
    auto m = association_matrix(os);
    CHECK(m.rows == std::vector<CweId>{CweId(22), CweId(89)});
    CHECK(m.cols == std::vector<CweId>{CweId(79), CweId(89)});
    REQUIRE(m.cells.size() == 2);
    CHECK(m.cells[0][0].cramers_v == doctest::Approx(1.0));
    CHECK(m.cells[0][0].n == 3);

    auto edges = network_edges(os);
    std::vector<NetworkEdge> want{{CweId(22), CweId(79), 2}, {CweId(22), CweId(89), 1}};
    CHECK(edges == want);
}
