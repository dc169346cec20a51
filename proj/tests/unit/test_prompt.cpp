#include <doctest.h>

#include "secrefine/corpus.hpp"
#include "secrefine/prompt.hpp"
#include "support.hpp"

using namespace secrefine;

namespace {

struct Fixture {
    Corpus corpus = load_corpus(testsupport::data_dir() / "corpus");
    const Scenario& scenario(int id) const { return *corpus.find_scenario(id); }
    const ScenarioVariant& variant(int id, Language l) const { return *corpus.find_variant(id, l); }
};

const char* kSayHello = "def say_hello(username):\n    return '<p>Hello ' + username + '</p>'\n";

}  // namespace

TEST_CASE_FIXTURE(Fixture, "raw prompt is the instruction plus the scenario context") {
    const auto& v = variant(10, Language::python);
    auto b = build_prompt(Technique::raw, scenario(10), v);
    auto text = b.render();
    CHECK(text.starts_with(b.instruction));
    CHECK(text.find(render_context(v)) != std::string::npos);
    CHECK(text.find(kNegativeExampleDirective) == std::string::npos);
    CHECK(text.find("Validate input") == std::string::npos);
    CHECK(b.negative_examples.empty());
    CHECK(b.meta_prompt.empty());
}

TEST_CASE_FIXTURE(Fixture, "nep prompt puts the directive before each negative example") {
    auto b = build_prompt(Technique::nep, scenario(10), variant(10, Language::python), {kSayHello, kSayHello});
    auto text = b.render();
    CHECK(text.find("Do not generate code like the below. The below code sample is insecure.") !=
          std::string::npos);
    size_t count = 0;
    for (size_t pos = 0; (pos = text.find(kNegativeExampleDirective, pos)) != std::string::npos; ++pos) ++count;
    CHECK(count == 2);
    CHECK(text.find(kNegativeExampleDirective) < text.find("say_hello"));
    CHECK_THROWS_AS(build_prompt(Technique::nep, scenario(10), variant(10, Language::python)), PromptError);
}

TEST_CASE_FIXTURE(Fixture, "cot prompt carries the checklist verbatim") {
    auto text = build_prompt(Technique::cot, scenario(5), variant(5, Language::java)).render();
    CHECK(text.find("- Prevent insecure deserialization") != std::string::npos);
    CHECK(text.find(kChainOfThoughtDirectives) != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "mp prompt places the meta prompt before the instruction") {
    auto b = build_prompt(Technique::mp, scenario(2), variant(2, Language::go), {}, std::string("You are a secure coder."));
    auto text = b.render();
    CHECK(text.find("You are a secure coder.") < text.find(b.instruction));
    CHECK_THROWS_AS(build_prompt(Technique::mp, scenario(2), variant(2, Language::go)), PromptError);
    CHECK_THROWS_AS(build_prompt(Technique::mp, scenario(2), variant(2, Language::go), {}, std::string()), PromptError);
}

TEST_CASE_FIXTURE(Fixture, "every refined prompt contains the raw instruction") {
    for (const auto& v : corpus.variants()) {
        const auto& s = scenario(v.scenario_id);
        auto raw = build_prompt(Technique::raw, s, v);
        REQUIRE_FALSE(raw.instruction.empty());
        for (auto t : kRefinementTechniques) {
            auto b = build_prompt(t, s, v, {"x = 1\n"}, std::string("meta"));
            CHECK(b.render().find(raw.instruction) != std::string::npos);
        }
    }
}

TEST_CASE_FIXTURE(Fixture, "ft uses the raw prompt unchanged") {
    const auto& v = variant(7, Language::javascript);
    CHECK(build_prompt(Technique::ft, scenario(7), v).render() == build_prompt(Technique::raw, scenario(7), v).render());
}
