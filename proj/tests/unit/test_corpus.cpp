#include <doctest.h>

#include <set>

#include "secrefine/corpus.hpp"
#include "secrefine/io.hpp"
#include "support.hpp"

using namespace secrefine;
using testsupport::TempDir;

namespace {
const auto kCorpus = testsupport::data_dir() / "corpus";
}

TEST_CASE("bundled corpus loads with ten scenarios and forty variants") {
    auto c = load_corpus(kCorpus);
    CHECK(c.scenarios().size() == 10);
    CHECK(c.variants().size() == 40);
    const auto* s10 = c.find_scenario(10);
    REQUIRE(s10);
    CHECK(s10->name == "Reflected Cross-Site Scripting");
    CHECK(s10->target_cwe == CweId(79));
    CHECK(validate_corpus(c).empty());
}

TEST_CASE("variants are ordered by scenario then language") {
    auto c = load_corpus(kCorpus);
    for (size_t i = 1; i < c.variants().size(); ++i) {
        const auto& a = c.variants()[i - 1];
        const auto& b = c.variants()[i];
        CHECK(std::tie(a.scenario_id, a.language) < std::tie(b.scenario_id, b.language));
    }
    CHECK(load_corpus(kCorpus) == c);
}

TEST_CASE("render_context is verbatim and holds exactly one marker") {
    auto c = load_corpus(kCorpus);
    for (const auto& v : c.variants()) {
        auto text = render_context(v);
        CHECK(marker_count(text) == 1);
        CHECK(text == v.source_prefix + v.marker + v.source_suffix);
        CHECK(render_context(v) == text);
        CHECK_FALSE(v.source_prefix.empty());
    }
    const auto* py10 = c.find_variant(10, Language::python);
    REQUIRE(py10);
    auto text = render_context(*py10);
    auto last = text.substr(text.rfind('\n', text.size() - 2) + 1);
    CHECK(last.find("-copilot next line-") != std::string::npos);
}

TEST_CASE("framework tags follow the manifest") {
    auto c = load_corpus(kCorpus);
    CHECK(c.find_variant(1, Language::python)->framework_tag == "flask");
    CHECK(c.find_variant(1, Language::javascript)->framework_tag == "express");
    CHECK(c.find_variant(1, Language::java)->framework_tag == "servlet");
    CHECK(c.find_variant(1, Language::go)->framework_tag == "net/http");
}

TEST_CASE("write then load is the identity") {
    TempDir dir("corpus");
    auto c = load_corpus(kCorpus);
    write_corpus(c, dir.path());
    CHECK(load_corpus(dir.path()) == c);
}

TEST_CASE("missing marker is reported with the file") {
    TempDir dir("corpus");
    auto c = load_corpus(kCorpus);
    write_corpus(c, dir.path());
    auto file = dir.path() / Corpus::variant_file_name(3, Language::go);
    auto text = io::read_file(file);
    auto pos = text.find("-copilot next line-");
    text.erase(pos, std::string("-copilot next line-").size());
    io::write_file_atomic(file, text);

    auto violations = validate_corpus(load_corpus_unchecked(dir.path()));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "marker absent");
    CHECK(violations[0].scenario_id == 3);
    try {
        load_corpus(dir.path());
        FAIL("expected CorpusError");
    } catch (const CorpusError& e) {
        std::string msg = e.what();
        CHECK(msg.find("marker absent") != std::string::npos);
        CHECK(msg.find("scenario_3.go") != std::string::npos);
    }
}

TEST_CASE("duplicated marker and non-contiguous ids are violations") {
    auto c = load_corpus(kCorpus);
    std::vector<Scenario> scenarios;
    std::vector<ScenarioVariant> variants;
    for (const auto& s : c.scenarios())
        if (s.id == 1 || s.id == 2 || s.id == 4) scenarios.push_back(s);
    for (const auto& v : c.variants())
        if (v.scenario_id == 1 || v.scenario_id == 2 || v.scenario_id == 4) variants.push_back(v);
    variants[0].source_suffix += "\n" + variants[0].marker + "\n";
    Corpus bad(c.languages(), scenarios, variants);
    std::set<std::string> rules;
    for (const auto& v : validate_corpus(bad)) rules.insert(v.rule);
    CHECK(rules.count("non-contiguous ids"));
    CHECK(rules.count("marker count = 2"));
}

TEST_CASE("missing manifest is an error") {
    TempDir dir("corpus");
    CHECK_THROWS_AS(load_corpus(dir.path()), CorpusError);
}
