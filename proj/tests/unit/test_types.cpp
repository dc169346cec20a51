#include <doctest.h>

#include "secrefine/types.hpp"

using namespace secrefine;

TEST_CASE("CweId parses every accepted spelling to the same value") {
    CHECK(CweId::parse("CWE-79") == CweId(79));
    CHECK(CweId::parse("cwe-79") == CweId(79));
    CHECK(CweId::parse("79") == CweId(79));
    CHECK(CweId::parse(" CWE-079 ").str() == "CWE-79");
    CHECK(CweId(1333).str() == "CWE-1333");
}

TEST_CASE("CweId rejects malformed text") {
    CHECK_THROWS_AS(CweId::parse("CWE-"), Error);
    CHECK_THROWS_AS(CweId::parse("CWE-0"), Error);
    CHECK_THROWS_AS(CweId::parse("XSS"), Error);
    CHECK_FALSE(CweId::try_parse("-5").has_value());
}

TEST_CASE("CWE sets order numerically") {
    CweSet s{CweId(798), CweId(20), CweId(209)};
    CHECK(to_string(s) == "{20,209,798}");
}

TEST_CASE("languages and techniques round-trip through text") {
    for (auto l : kAllLanguages) CHECK(parse_language(to_string(l)) == l);
    for (auto t : kAllTechniques) CHECK(parse_technique(to_string(t)) == t);
    CHECK(display_name(Technique::cot) == "CoT");
    CHECK(display_name(Technique::nep) == "NEP");
    CHECK(file_extension(Language::javascript) == "js");
    CHECK(line_comment(Language::python) == "#");
    CHECK_THROWS_AS(parse_language("rust"), Error);
    CHECK_THROWS_AS(parse_technique("few-shot"), Error);
}

TEST_CASE("sample keys round-trip and order by provenance") {
    SampleKey k{"gpt", Technique::mp, Language::go, 7, 3};
    CHECK(k.str() == "gpt/mp/go/scenario_7/sample_3");
    CHECK(k.cell_path() == "gpt/mp/go/scenario_7");
    CHECK(SampleKey::parse(k.str()) == k);
    CHECK(CellKey::of(k).str() == k.cell_path());

    SampleKey a{"a", Technique::raw, Language::python, 2, 0};
    SampleKey b{"a", Technique::raw, Language::python, 10, 0};
    CHECK(a < b);
    CHECK_THROWS_AS(SampleKey::parse("gpt/mp/go/scenario_x/sample_3"), Error);
    CHECK_THROWS_AS(SampleKey::parse("gpt/mp/go/scenario_1"), Error);
}
