#include "secrefine/orchestrator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ctime>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "secrefine/extract.hpp"
#include "secrefine/io.hpp"
#include "secrefine/prompt.hpp"

namespace secrefine {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class RateLimiter {
public:
    explicit RateLimiter(double per_sec)
        : interval_(per_sec > 0 ? std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(1.0 / per_sec))
                                : Clock::duration::zero()) {}

    void acquire() {
        if (interval_ == Clock::duration::zero()) return;
        Clock::time_point slot;
        {
            std::lock_guard lock(mutex_);
            slot = std::max(Clock::now(), next_);
            next_ = slot + interval_;
        }
        std::this_thread::sleep_until(slot);
    }

private:
    Clock::duration interval_;
    Clock::time_point next_{};
    std::mutex mutex_;
};

struct Attempted {
    Completion completion;
    std::chrono::milliseconds elapsed{0};
};

Attempted call_with_retry(Provider& provider, const CompletionRequest& request, const ExecuteOptions& options,
                          std::uint64_t seed, RateLimiter* limiter) {
    std::mt19937_64 rng(seed ^ fnv1a(request.fixture_key));
    std::uniform_real_distribution<double> jitter(0.5, 1.5);
    const int attempts = std::max(1, options.max_attempts);
    for (int attempt = 1;; ++attempt) {
        if (limiter) limiter->acquire();
        try {
            auto start = Clock::now();
            Attempted out;
            out.completion = provider.complete(request);
            out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            return out;
        } catch (const ProviderError&) {
            if (attempt >= attempts) throw;
        }
        auto wait = options.backoff_base.count() * std::pow(2.0, attempt - 1) * jitter(rng);
        std::this_thread::sleep_for(std::chrono::milliseconds(static_cast<long>(wait)));
    }
}

struct Job {
    SampleKey key;
    const ModelSpec* served_by = nullptr;
};

}  // namespace

long RunReport::failed_samples() const {
    long n = 0;
    for (const auto& f : failed_cells) n += static_cast<long>(f.sample_indices.size());
    return n;
}

const ModelSpec* fine_tuned_for(const std::vector<ModelSpec>& models, const std::string& base_id) {
    for (const auto& m : models)
        if (m.fine_tuned_of && *m.fine_tuned_of == base_id) return &m;
    return nullptr;
}

std::vector<std::string> eligible_models(const RunPlan& plan, Technique technique, const std::vector<ModelSpec>& models,
                                         const Exclusions& exclusions) {
    std::vector<std::string> out;
    for (const auto& id : plan.models) {
        if (exclusions.count({id, technique})) continue;
        if (technique == Technique::ft && !fine_tuned_for(models, id)) continue;
        out.push_back(id);
    }
    return out;
}

long expected_sample_count(const RunPlan& plan, const std::vector<ModelSpec>& models, const Exclusions& exclusions) {
    long total = 0;
    for (auto t : plan.techniques)
        total += static_cast<long>(eligible_models(plan, t, models, exclusions).size()) *
                 static_cast<long>(plan.languages.size()) * static_cast<long>(plan.scenario_ids.size()) *
                 plan.samples_per_cell;
    return total;
}

void validate_plan(const RunPlan& plan, const Corpus& corpus, const std::vector<ModelSpec>& models,
                   const std::map<std::string, ProviderHandle>& providers) {
    if (plan.samples_per_cell < 1) throw PlanError("samples_per_cell must be >= 1");
    auto find_model = [&](const std::string& id) -> const ModelSpec* {
        for (const auto& m : models)
            if (m.id == id) return &m;
        return nullptr;
    };
    auto need_provider = [&](const std::string& id) {
        auto it = providers.find(id);
        if (it == providers.end() || !it->second.provider) throw PlanError("no provider for model '" + id + "'");
    };
    for (const auto& id : plan.models) {
        if (!find_model(id)) throw PlanError("unknown model id '" + id + "'");
        need_provider(id);
    }
    for (const auto& m : models)
        if (m.fine_tuned_of && !find_model(*m.fine_tuned_of))
            throw PlanError("model '" + m.id + "' is fine-tuned from unknown model '" + *m.fine_tuned_of + "'");
    if (std::find(plan.techniques.begin(), plan.techniques.end(), Technique::ft) != plan.techniques.end())
        for (const auto& id : plan.models)
            if (auto ft = fine_tuned_for(models, id)) need_provider(ft->id);
    for (int sid : plan.scenario_ids)
        if (!corpus.find_scenario(sid)) throw PlanError("unknown scenario id " + std::to_string(sid));
    for (auto lang : plan.languages)
        for (int sid : plan.scenario_ids)
            if (!corpus.find_variant(sid, lang))
                throw PlanError("corpus has no " + std::string(to_string(lang)) + " variant for scenario " +
                                std::to_string(sid));
}

std::string generate_meta_prompt(const ModelSpec& model, Provider& provider, SampleStore& store,
                                 const ExecuteOptions& options, std::uint64_t seed) {
    if (auto cached = store.meta_prompt(model.id)) return *cached;
    CompletionRequest req;
    req.system = options.system_prompt;
    req.user = std::string(kMetaPromptRequest);
    req.model_name = model.model_name;
    req.sampling = options.sampling;
    req.fixture_key = model.id + "/meta_prompt";
    std::string text;
    try {
        text = call_with_retry(provider, req, options, seed, nullptr).completion.text;
    } catch (const ProviderError& e) {
        throw ProviderError("meta prompt generation failed for model '" + model.id + "': " + e.what());
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw ProviderError("empty meta prompt from model '" + model.id + "'");
    store.write_meta_prompt(model.id, text);
    return text;
}

RunReport execute_plan(const RunPlan& plan, const Corpus& corpus, const std::vector<ModelSpec>& models,
                       const std::map<std::string, ProviderHandle>& providers, SampleStore& store,
                       const ExecuteOptions& options) {
    validate_plan(plan, corpus, models, providers);

    RunReport report;
    report.expected_samples = expected_sample_count(plan, models, options.exclusions);

    auto spec_of = [&](const std::string& id) -> const ModelSpec& {
        for (const auto& m : models)
            if (m.id == id) return m;
        throw PlanError("unknown model id '" + id + "'");
    };

    std::mutex report_mutex;
    std::map<CellKey, FailedCell> failures;
    auto record_failure = [&](const SampleKey& key, const std::string& reason) {
        std::lock_guard lock(report_mutex);
        auto& f = failures[CellKey::of(key)];
        f.cell = CellKey::of(key);
        f.sample_indices.push_back(key.sample_index);
        if (f.reason.empty()) f.reason = reason;
    };

    // Meta prompts: one per model, reused for every mp cell of the run.
    std::map<std::string, std::string> meta_prompts;
    std::map<std::string, std::string> meta_failures;
    if (std::find(plan.techniques.begin(), plan.techniques.end(), Technique::mp) != plan.techniques.end()) {
        for (const auto& id : eligible_models(plan, Technique::mp, models, options.exclusions)) {
            try {
                meta_prompts[id] =
                    generate_meta_prompt(spec_of(id), *providers.at(id).provider, store, options, plan.seed);
            } catch (const ProviderError& e) {
                meta_failures[id] = e.what();
            }
        }
    }

    auto build_jobs = [&](bool nep_phase) {
        std::vector<Job> jobs;
        for (auto t : plan.techniques) {
            if ((t == Technique::nep) != nep_phase) continue;
            for (const auto& id : eligible_models(plan, t, models, options.exclusions)) {
                const ModelSpec* served = t == Technique::ft ? fine_tuned_for(models, id) : &spec_of(id);
                for (auto lang : plan.languages)
                    for (int sid : plan.scenario_ids)
                        for (int i = 0; i < plan.samples_per_cell; ++i) {
                            SampleKey key{id, t, lang, sid, i};
                            if (options.resume && store.contains(key)) {
                                ++report.reused;
                                continue;
                            }
                            jobs.push_back({key, served});
                        }
            }
        }
        return jobs;
    };

    std::atomic<bool> aborted{false};
    std::exception_ptr abort_reason;
    std::atomic<long> generated{0};

    auto run_job = [&](const Job& job, RateLimiter& limiter) {
        const auto& key = job.key;
        const auto* scenario = corpus.find_scenario(key.scenario_id);
        const auto* variant = corpus.find_variant(key.scenario_id, key.language);

        std::vector<std::string> negatives;
        std::optional<std::string> meta;
        if (key.technique == Technique::nep) {
            for (int i = 0; i < plan.samples_per_cell; ++i) {
                SampleKey raw_key{key.model_id, Technique::raw, key.language, key.scenario_id, i};
                if (!store.contains(raw_key)) continue;
                negatives.push_back(store.read(raw_key).extracted_code);
                if (plan.nep_examples == NepExamples::first) break;
            }
            if (negatives.empty()) return record_failure(key, "no raw sample available as negative example");
        } else if (key.technique == Technique::mp) {
            auto it = meta_prompts.find(key.model_id);
            if (it == meta_prompts.end()) return record_failure(key, meta_failures[key.model_id]);
            meta = it->second;
        }

        const auto bundle = build_prompt(key.technique, *scenario, *variant, negatives, meta);
        CompletionRequest req;
        req.system = options.system_prompt;
        req.user = bundle.render();
        req.model_name = job.served_by->model_name;
        req.sampling = options.sampling;
        req.fixture_key = key.str();

        Attempted result;
        try {
            result = call_with_retry(*providers.at(job.served_by->id).provider, req, options, plan.seed, &limiter);
        } catch (const ProviderError& e) {
            return record_failure(key, std::string("provider exhausted: ") + e.what());
        }

        CodeSample sample;
        sample.key = key;
        sample.served_by = job.served_by->id;
        sample.model_name = job.served_by->model_name;
        sample.raw_response = result.completion.text;
        try {
            sample.extracted_code = extract_code(sample.raw_response, *variant);
        } catch (const ExtractionError& e) {
            return record_failure(key, e.what());
        }
        sample.prompt_sha256 = io::sha256_hex(req.user);
        sample.prompt_tokens = result.completion.prompt_tokens;
        sample.completion_tokens = result.completion.completion_tokens;
        sample.generation_time = result.elapsed;
        if (job.served_by->locally_hosted) sample.memory_used = result.completion.memory_bytes;
        sample.created_at = utc_now();

        store.write(sample);
        if (!options.timings_path.empty()) {
            json t{{"key", key.str()},
                   {"generation_time_ms", sample.generation_time.count()},
                   {"created_at", sample.created_at},
                   {"memory_used", sample.memory_used ? json(*sample.memory_used) : json(nullptr)}};
            std::lock_guard lock(report_mutex);
            io::append_line(options.timings_path, t.dump());
        }
        ++generated;
    };

    auto run_phase = [&](const std::vector<Job>& jobs) {
        // One worker pool per provider instance, sized by its concurrency bound.
        std::map<Provider*, std::vector<const Job*>> by_provider;
        std::map<Provider*, ProviderSettings> settings;
        for (const auto& job : jobs) {
            const auto& handle = providers.at(job.served_by->id);
            by_provider[handle.provider.get()].push_back(&job);
            settings.emplace(handle.provider.get(), handle.settings);
        }
        std::vector<std::unique_ptr<RateLimiter>> limiters;
        std::vector<std::unique_ptr<std::atomic<std::size_t>>> cursors;
        std::vector<std::jthread> workers;
        for (auto& [provider, queue] : by_provider) {
            const auto& s = settings[provider];
            limiters.push_back(std::make_unique<RateLimiter>(s.rate_limit_per_sec));
            cursors.push_back(std::make_unique<std::atomic<std::size_t>>(0));
            auto* limiter = limiters.back().get();
            auto* cursor = cursors.back().get();
            const auto* q = &queue;
            for (int w = 0; w < std::max(1, s.concurrency); ++w) {
                workers.emplace_back([&, limiter, cursor, q] {
                    while (!aborted) {
                        auto idx = cursor->fetch_add(1);
                        if (idx >= q->size()) return;
                        try {
                            run_job(*(*q)[idx], *limiter);
                        } catch (...) {
                            std::lock_guard lock(report_mutex);
                            if (!aborted.exchange(true)) abort_reason = std::current_exception();
                            return;
                        }
                    }
                });
            }
        }
        workers.clear();  // joins
        if (aborted) std::rethrow_exception(abort_reason);
    };

    run_phase(build_jobs(false));
    run_phase(build_jobs(true));

    report.generated = generated;
    for (auto& [cell, f] : failures) {
        std::sort(f.sample_indices.begin(), f.sample_indices.end());
        report.failed_cells.push_back(f);
    }

    for (auto t : plan.techniques)
        for (const auto& id : eligible_models(plan, t, models, options.exclusions))
            for (auto lang : plan.languages)
                for (int sid : plan.scenario_ids) {
                    CellKey cell{id, t, lang, sid};
                    bool complete = true;
                    for (int i = 0; i < plan.samples_per_cell && complete; ++i)
                        complete = store.contains({id, t, lang, sid, i});
                    if (complete && !store.cell_complete(cell)) store.mark_cell_complete(cell);
                    report.cell_status[cell.str()] = complete ? "complete" : "failed";
                }
    return report;
}

}  // namespace secrefine
