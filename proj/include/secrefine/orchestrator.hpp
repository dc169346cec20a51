#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "secrefine/corpus.hpp"
#include "secrefine/provider.hpp"
#include "secrefine/sample_store.hpp"
#include "secrefine/types.hpp"

namespace secrefine {

enum class ModelKind { general, reasoning };

struct ModelSpec {
    std::string id;
    std::string provider;  // name of a provider entry in the run configuration
    std::string model_name;
    ModelKind kind = ModelKind::general;
    std::optional<std::string> fine_tuned_of;
    bool locally_hosted = false;
    nlohmann::json endpoint = nlohmann::json::object();  // opaque to the orchestrator
};

enum class NepExamples { first, all };

struct RunPlan {
    std::vector<std::string> models;  // base model ids
    std::vector<Technique> techniques;
    std::vector<Language> languages;
    std::vector<int> scenario_ids;
    int samples_per_cell = 10;
    std::uint64_t seed = 0;
    NepExamples nep_examples = NepExamples::first;
};

// A model/technique pair declared unavailable (reported as N/A, never generated).
using Exclusions = std::set<std::pair<std::string, Technique>>;

class PlanError : public Error {
public:
    using Error::Error;
};

struct ProviderSettings {
    int concurrency = 1;
    double rate_limit_per_sec = 0.0;  // 0 = unlimited
};

struct ProviderHandle {
    std::shared_ptr<Provider> provider;
    ProviderSettings settings;
};

struct ExecuteOptions {
    bool resume = true;
    int max_attempts = 3;
    std::chrono::milliseconds backoff_base{250};
    std::string system_prompt;
    std::map<std::string, std::string> sampling;
    Exclusions exclusions;
    std::filesystem::path timings_path;  // JSON Lines; empty disables timing records
};

struct FailedCell {
    CellKey cell;
    std::vector<int> sample_indices;
    std::string reason;
};

struct RunReport {
    long expected_samples = 0;
    long generated = 0;
    long reused = 0;  // already present when resuming
    std::vector<FailedCell> failed_cells;
    std::map<std::string, std::string> cell_status;  // cell path -> "complete" | "failed"

    long failed_samples() const;
};

// Spec of the fine-tuned model serving `base_id`, if any.
const ModelSpec* fine_tuned_for(const std::vector<ModelSpec>& models, const std::string& base_id);

// Base models of the plan that can run `technique`.
std::vector<std::string> eligible_models(const RunPlan& plan, Technique technique, const std::vector<ModelSpec>& models,
                                         const Exclusions& exclusions);

long expected_sample_count(const RunPlan& plan, const std::vector<ModelSpec>& models, const Exclusions& exclusions);

// Throws PlanError for unknown scenario, language, model, or missing provider.
void validate_plan(const RunPlan& plan, const Corpus& corpus, const std::vector<ModelSpec>& models,
                   const std::map<std::string, ProviderHandle>& providers);

// Returns the cached meta prompt for `model`, asking the provider once when absent.
std::string generate_meta_prompt(const ModelSpec& model, Provider& provider, SampleStore& store,
                                 const ExecuteOptions& options, std::uint64_t seed);

// Runs the whole sampling plan. `providers` is keyed by ModelSpec id (fine-tuned specs included).
RunReport execute_plan(const RunPlan& plan, const Corpus& corpus, const std::vector<ModelSpec>& models,
                       const std::map<std::string, ProviderHandle>& providers, SampleStore& store,
                       const ExecuteOptions& options);

}  // namespace secrefine
