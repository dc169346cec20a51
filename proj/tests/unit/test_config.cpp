#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "secrefine/config.hpp"
#include "support.hpp"

using namespace secrefine;
using nlohmann::json;

namespace {

json demo() {
    std::ifstream in(testsupport::source_dir() / "configs/replay_demo.json");
    return json::parse(in);
}

RunConfig parse(const json& doc) { return parse_config(doc, testsupport::source_dir() / "configs"); }

bool has(const std::vector<std::string>& v, const std::string& needle) {
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("demo config parses and validates") {
    auto c = parse(demo());
    CHECK(c.corpus_path == (testsupport::source_dir() / "data/corpus").lexically_normal());
    CHECK(c.plan.scenario_ids.empty());  // "all": filled from the corpus at generate time
    CHECK(c.plan.languages.size() == 4);
    CHECK(c.models.size() == 4);
    CHECK(c.find_model("mock-beta-ft")->locally_hosted);
    CHECK(c.find_model("mock-beta")->kind == ModelKind::reasoning);
    auto report = validate_config(c);
    CHECK(report.errors.empty());

    auto providers = make_providers(c);
    CHECK(providers.size() == 4);
    CHECK(providers.at("mock-alpha").provider == providers.at("mock-beta").provider);
    CHECK(providers.at("mock-alpha").settings.concurrency == 4);
    CHECK(execute_options(c).timings_path == c.run_dir() / "timings.jsonl");
}

TEST_CASE("unknown plan model is named") {
    auto doc = demo();
    doc["plan"]["models"].push_back("gpt-nonexistent");
    auto report = validate_config(parse(doc));
    CHECK(has(report.errors, "plan references unknown model id 'gpt-nonexistent'"));
}

TEST_CASE("literal credentials are refused") {
    auto doc = demo();
    doc["providers"]["replay"]["api_key"] = "sk-123";
    CHECK_THROWS_AS(parse(doc), ConfigError);
}

TEST_CASE("http provider reads its key variable name") {
    auto doc = demo();
    doc["providers"]["remote"] = {{"type", "http"}, {"base_url", "http://127.0.0.1:9"}, {"api_key_env", "MY_KEY"}};
    auto c = parse(doc);
    CHECK(c.providers.at("remote").http.api_key_env == "MY_KEY");
}

TEST_CASE("severity table gaps produce warnings") {
    auto doc = demo();
    doc["cwe_mapping"] = {{"custom/rule", "CWE-4242"}};
    auto report = validate_config(parse(doc));
    CHECK(report.errors.empty());
    CHECK(has(report.warnings, "severity table lacks"));
    CHECK(has(report.warnings, "4242"));
}

TEST_CASE("ft plan needs a fine-tuned spec") {
    auto doc = demo();
    doc["models"].erase(3);
    auto report = validate_config(parse(doc));
    CHECK(has(report.errors, "mock-beta"));
    doc["exclusions"] = {{{"model", "mock-beta"}, {"technique", "ft"}}};
    CHECK(validate_config(parse(doc)).errors.empty());
}

TEST_CASE("bad values are rejected") {
    auto doc = demo();
    doc["plan"]["techniques"] = {"raw", "telepathy"};
    CHECK_THROWS(parse(doc));
    doc = demo();
    doc["severity_mode"] = "mean";
    CHECK_THROWS_AS(parse(doc), ConfigError);
    CHECK_THROWS_WITH_AS(parse_format("pdf"), doctest::Contains("unsupported format 'pdf'"), ConfigError);
    CHECK(parse_format("md") == Format::markdown);
}
