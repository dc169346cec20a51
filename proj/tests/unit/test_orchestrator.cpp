#include <doctest.h>

#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "secrefine/corpus.hpp"
#include "secrefine/orchestrator.hpp"
#include "support.hpp"

using namespace secrefine;
using testsupport::TempDir;

namespace {

// Answers with a small code body; tracks concurrency and can fail on demand.
class FakeProvider : public Provider {
public:
    std::atomic<int> in_flight{0};
    std::atomic<int> peak{0};
    std::atomic<int> calls{0};
    std::atomic<int> meta_calls{0};
    std::string meta_text = "Always validate input.";
    std::set<std::string> always_fail;    // fixture keys that never succeed
    std::map<std::string, int> fail_first;  // fixture key -> failures before success
    std::string reply = "```python\nreturn 42\n```";
    std::mutex mutex;
    std::vector<CompletionRequest> seen;

    Completion complete(const CompletionRequest& req) override {
        int now = ++in_flight;
        int prev = peak.load();
        while (now > prev && !peak.compare_exchange_weak(prev, now)) {}
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
        --in_flight;
        ++calls;
        {
            std::lock_guard lock(mutex);
            seen.push_back(req);
            if (always_fail.count(req.fixture_key)) throw ProviderError("scripted failure");
            auto it = fail_first.find(req.fixture_key);
            if (it != fail_first.end() && it->second > 0) {
                --it->second;
                throw ProviderError("transient");
            }
        }
        if (req.fixture_key.ends_with("/meta_prompt")) {
            ++meta_calls;
            return {meta_text, 1, 1, {}, {}};
        }
        return {reply, 1, 1, {}, {}};
    }
};

const Corpus& corpus() {
    static Corpus c = load_corpus(testsupport::data_dir() / "corpus");
    return c;
}

struct Fixture {
    TempDir dir{"orch"};
    SampleStore store{dir.path()};
    std::shared_ptr<FakeProvider> fake = std::make_shared<FakeProvider>();
    std::vector<ModelSpec> models{{"a", "p", "a-1", ModelKind::general, std::nullopt, false, {}},
                                  {"a-ft", "p", "a-ft-1", ModelKind::general, "a", false, {}},
                                  {"b", "p", "b-1", ModelKind::reasoning, std::nullopt, false, {}}};
    std::map<std::string, ProviderHandle> providers;
    RunPlan plan;
    ExecuteOptions options;

    Fixture() {
        for (const auto& m : models) providers[m.id] = {fake, {2, 0.0}};
        plan.models = {"a", "b"};
        plan.techniques = {Technique::raw, Technique::nep, Technique::cot, Technique::mp, Technique::ft};
        plan.languages = {Language::python};
        plan.scenario_ids = {1, 2};
        plan.samples_per_cell = 2;
        plan.seed = 7;
        options.backoff_base = std::chrono::milliseconds(0);
    }

    RunReport run() { return execute_plan(plan, corpus(), models, providers, store, options); }
};

}  // namespace

TEST_CASE("expected counts skip models without a fine-tuned twin and exclusions") {
    Fixture f;
    // raw/nep/cot/mp for a and b, ft only for a: (4*2 + 1) * 1 lang * 2 scenarios * 2 samples
    CHECK(expected_sample_count(f.plan, f.models, {}) == 36);
    Exclusions ex{{"b", Technique::mp}};
    CHECK(expected_sample_count(f.plan, f.models, ex) == 32);
    CHECK(eligible_models(f.plan, Technique::ft, f.models, {}) == std::vector<std::string>{"a"});
    REQUIRE(fine_tuned_for(f.models, "a"));
    CHECK(fine_tuned_for(f.models, "a")->id == "a-ft");
    CHECK(fine_tuned_for(f.models, "b") == nullptr);
}

TEST_CASE("full plan generates every sample once") {
    Fixture f;
    auto r = f.run();
    CHECK(r.expected_samples == 36);
    CHECK(r.generated == 36);
    CHECK(r.failed_cells.empty());
    CHECK(f.store.keys().size() == 36);
    CHECK(r.cell_status.size() == 18);
    for (const auto& [cell, status] : r.cell_status) CHECK(status == "complete");
    CHECK(f.fake->meta_calls == 2);
}

TEST_CASE("concurrency bound is respected") {
    Fixture f;
    for (auto& [id, h] : f.providers) h.settings.concurrency = 3;
    f.plan.scenario_ids = {1, 2, 3, 4, 5};
    f.plan.samples_per_cell = 3;
    f.run();
    CHECK(f.fake->peak <= 3);
    CHECK(f.fake->peak >= 2);
}

TEST_CASE("ft cells are served by the fine-tuned spec and stored under the base id") {
    Fixture f;
    f.plan.techniques = {Technique::ft};
    f.run();
    auto keys = f.store.keys();
    REQUIRE(keys.size() == 4);
    for (const auto& k : keys) {
        CHECK(k.model_id == "a");
        auto s = f.store.read(k);
        CHECK(s.served_by == "a-ft");
        CHECK(s.model_name == "a-ft-1");
    }
}

TEST_CASE("meta prompt is requested once per model and reused") {
    Fixture f;
    f.plan.techniques = {Technique::mp};
    f.run();
    CHECK(f.fake->meta_calls == 2);
    CHECK(f.store.meta_prompt("a") == "Always validate input.");
    for (const auto& req : f.fake->seen)
        if (!req.fixture_key.ends_with("/meta_prompt")) CHECK(req.user.starts_with("Always validate input."));

    // A second run finds the cached prompts.
    Fixture g;
    g.plan.techniques = {Technique::mp};
    g.store.write_meta_prompt("a", "cached a");
    g.store.write_meta_prompt("b", "cached b");
    g.run();
    CHECK(g.fake->meta_calls == 0);
}

TEST_CASE("empty meta prompt fails the model's mp cells only") {
    Fixture f;
    f.plan.techniques = {Technique::raw, Technique::mp};
    f.fake->meta_text = "  \n";
    auto r = f.run();
    CHECK(r.generated == 8);
    REQUIRE(r.failed_cells.size() == 4);
    for (const auto& fc : r.failed_cells) {
        CHECK(fc.cell.technique == Technique::mp);
        CHECK(fc.reason.find("empty meta prompt") != std::string::npos);
        CHECK(fc.sample_indices == std::vector<int>{0, 1});
    }
    CHECK(r.failed_samples() == 8);
    CHECK(r.cell_status.at("a/mp/python/scenario_1") == "failed");
    CHECK(r.cell_status.at("a/raw/python/scenario_1") == "complete");
}

TEST_CASE("transient failures are retried; exhausted ones fail the sample") {
    Fixture f;
    f.plan.techniques = {Technique::raw};
    f.options.max_attempts = 3;
    f.fake->fail_first["a/raw/python/scenario_1/sample_0"] = 2;
    f.fake->always_fail.insert("b/raw/python/scenario_2/sample_1");
    auto r = f.run();
    CHECK(r.generated == 7);
    REQUIRE(r.failed_cells.size() == 1);
    CHECK(r.failed_cells[0].cell.str() == "b/raw/python/scenario_2");
    CHECK(r.failed_cells[0].sample_indices == std::vector<int>{1});
    CHECK(r.failed_cells[0].reason.find("provider exhausted") != std::string::npos);
    CHECK(f.store.contains({"a", Technique::raw, Language::python, 1, 0}));
    CHECK_FALSE(f.store.cell_complete({"b", Technique::raw, Language::python, 2}));
    CHECK(f.store.cell_complete({"b", Technique::raw, Language::python, 1}));
}

TEST_CASE("resume reuses stored samples and fills gaps") {
    Fixture f;
    f.plan.techniques = {Technique::raw};
    f.fake->always_fail.insert("a/raw/python/scenario_1/sample_1");
    auto first = f.run();
    CHECK(first.generated == 7);

    f.fake->always_fail.clear();
    const int before = f.fake->calls;
    auto second = f.run();
    CHECK(second.reused == 7);
    CHECK(second.generated == 1);
    CHECK(second.failed_cells.empty());
    CHECK(f.fake->calls - before == 1);
}

TEST_CASE("nep uses raw samples as negatives and fails without them") {
    Fixture f;
    f.plan.techniques = {Technique::nep};
    auto r = f.run();
    CHECK(r.generated == 0);
    CHECK(r.failed_cells.size() == 4);
    CHECK(r.failed_cells[0].reason == "no raw sample available as negative example");

    Fixture g;
    g.plan.techniques = {Technique::raw, Technique::nep};
    g.fake->reply = "```python\nraw_marker_value = 1\n```";
    auto r2 = g.run();
    CHECK(r2.failed_cells.empty());
    int nep_prompts = 0;
    for (const auto& req : g.fake->seen)
        if (req.fixture_key.find("/nep/") != std::string::npos) {
            ++nep_prompts;
            CHECK(req.user.find("raw_marker_value = 1") != std::string::npos);
        }
    CHECK(nep_prompts == 8);
}

TEST_CASE("extraction failure is recorded against the sample") {
    Fixture f;
    f.plan.techniques = {Technique::raw};
    f.plan.models = {"a"};
    f.fake->reply = "I cannot help with that.";
    auto r = f.run();
    CHECK(r.generated == 0);
    REQUIRE(r.failed_cells.size() == 2);
    CHECK(r.failed_cells[0].reason == "no code found");
}

TEST_CASE("plan validation rejects bad references") {
    Fixture f;
    SUBCASE("unknown model") {
        f.plan.models.push_back("zzz");
        CHECK_THROWS_WITH_AS(f.run(), "unknown model id 'zzz'", PlanError);
    }
    SUBCASE("unknown scenario") {
        f.plan.scenario_ids = {99};
        CHECK_THROWS_WITH_AS(f.run(), "unknown scenario id 99", PlanError);
    }
    SUBCASE("missing provider") {
        f.providers.erase("b");
        CHECK_THROWS_WITH_AS(f.run(), "no provider for model 'b'", PlanError);
    }
    SUBCASE("missing ft provider") {
        f.providers.erase("a-ft");
        CHECK_THROWS_AS(f.run(), PlanError);
    }
    SUBCASE("zero samples") {
        f.plan.samples_per_cell = 0;
        CHECK_THROWS_AS(f.run(), PlanError);
    }
}

TEST_CASE("timing records go to the side file") {
    Fixture f;
    f.plan.techniques = {Technique::raw};
    f.options.timings_path = f.dir.path() / "timings.jsonl";
    f.run();
    std::ifstream in(f.options.timings_path);
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 8);
}
