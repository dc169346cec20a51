#include <doctest.h>

#include "secrefine/io.hpp"
#include "secrefine/sample_store.hpp"
#include "support.hpp"

using namespace secrefine;
using testsupport::TempDir;

namespace {

CodeSample make(const SampleKey& key, const std::string& code) {
    CodeSample s;
    s.key = key;
    s.served_by = key.model_id;
    s.model_name = key.model_id + "-v1";
    s.raw_response = "```\n" + code + "```";
    s.extracted_code = code;
    s.prompt_sha256 = io::sha256_hex("prompt");
    s.prompt_tokens = 10;
    s.completion_tokens = 4;
    s.generation_time = std::chrono::milliseconds(123);
    s.created_at = "2025-01-01T00:00:00Z";
    return s;
}

}  // namespace

TEST_CASE("samples round-trip through the store") {
    TempDir dir("store");
    SampleStore store(dir.path());
    SampleKey k{"m", Technique::cot, Language::java, 4, 1};
    CHECK_FALSE(store.contains(k));
    store.write(make(k, "class A {}\n"));
    REQUIRE(store.contains(k));
    auto s = store.read(k);
    CHECK(s.extracted_code == "class A {}\n");
    CHECK(s.model_name == "m-v1");
    CHECK(s.prompt_tokens == 10);
    CHECK(store.code_path(k) == dir.path() / "m/cot/java/scenario_4/sample_1.java");
    CHECK(std::filesystem::exists(store.meta_path(k)));
}

TEST_CASE("persisted bytes do not depend on timing") {
    TempDir a("sa"), b("sb");
    SampleKey k{"m", Technique::raw, Language::go, 1, 0};
    auto s1 = make(k, "package main\n");
    auto s2 = s1;
    s2.generation_time = std::chrono::milliseconds(999);
    s2.created_at = "2030-06-01T12:00:00Z";
    SampleStore(a.path()).write(s1);
    SampleStore(b.path()).write(s2);
    CHECK(io::tree_digest(a.path()) == io::tree_digest(b.path()));
}

TEST_CASE("keys are listed in provenance order") {
    TempDir dir("store");
    SampleStore store(dir.path());
    std::vector<SampleKey> keys{{"b", Technique::raw, Language::python, 1, 0},
                                {"a", Technique::nep, Language::go, 10, 1},
                                {"a", Technique::nep, Language::go, 2, 0},
                                {"a", Technique::raw, Language::java, 3, 0}};
    for (const auto& k : keys) store.write(make(k, "x = 1\n"));
    auto listed = store.keys();
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    CHECK(listed == sorted);
}

TEST_CASE("meta prompts and cell markers") {
    TempDir dir("store");
    SampleStore store(dir.path());
    CHECK_FALSE(store.meta_prompt("m").has_value());
    store.write_meta_prompt("m", "be secure");
    CHECK(store.meta_prompt("m") == "be secure");
    CellKey cell{"m", Technique::mp, Language::python, 1};
    CHECK_FALSE(store.cell_complete(cell));
    store.mark_cell_complete(cell);
    CHECK(store.cell_complete(cell));
    CHECK(store.keys().empty());
}
