#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secrefine/config.hpp"
#include "secrefine/finding.hpp"
#include "secrefine/outcomes.hpp"
#include "secrefine/report.hpp"
#include "secrefine/rules.hpp"
#include "secrefine/severity.hpp"

namespace secrefine {

// Output layout below a run's output root:
//   samples/                 sample store (code + .meta per sample, meta prompts)
//   run/timings.jsonl        per-sample timing records (not part of any digest)
//   run/generation.json      generation report: counts and failed cells
//   analysis/records.jsonl   one AnalysisRecord per sample, in key order
//   analysis/summary.json    analyzer versions, SARIF warnings, unmapped counts
//   scores/cells.json        per-cell totals and CWE sets
//   scores/improvements.json per (model, language, technique) improvement values
//   outcomes/cells.jsonl     per refined cell outcome
//   outcomes/*.json|csv      distribution, associations, edges
//   report/                  rendered tables, heatmap grids, edge lists
//   manifest.json

enum class Stage { generate, analyze, score, outcomes, report };
inline constexpr Stage kAllStages[] = {Stage::generate, Stage::analyze, Stage::score, Stage::outcomes,
                                       Stage::report};
std::string_view to_string(Stage s);
Stage parse_stage(std::string_view text);

// A stage could not run or failed part-way; outputs written so far are kept.
class StageError : public Error {
public:
    using Error::Error;
};

// ---- analyze ----

struct AnalyzeSettings {
    std::filesystem::path rules_path;
    std::vector<std::filesystem::path> sarif_dirs;
    std::optional<std::filesystem::path> overrides_path;
    CweMapping cwe_mapping;
    std::optional<std::string> analyzer_command;  // {samples} and {sarif} are substituted
    int threads = 0;                              // 0 = hardware concurrency
};

// Builtin findings for `code` merged with `external` findings for the same file, deduplicated.
AnalysisRecord analyze_source(const std::string& sample_key, std::string_view code, Language lang,
                              const std::string& file, const RulePack& pack, std::span<const Finding> external);

// Analyzes every sample of the store at `samples_dir` and writes records.jsonl + summary.json.
std::vector<AnalysisRecord> run_analyze(const std::filesystem::path& samples_dir, const AnalyzeSettings& settings,
                                        const std::filesystem::path& out_dir);

std::vector<AnalysisRecord> read_records(const std::filesystem::path& analysis_dir);

// ---- score ----

struct ScoreOutput {
    std::vector<CellScore> cells;  // CellKey order
    std::vector<ImprovementResult> improvements;
};

ScoreOutput score_records(std::span<const AnalysisRecord> records, const SeverityTable& table,
                          SeverityMode mode = SeverityMode::multiset);
ScoreOutput run_score(const std::filesystem::path& analysis_dir, const SeverityTable& table, SeverityMode mode,
                      const std::filesystem::path& out_dir);
ScoreOutput read_scores(const std::filesystem::path& scores_dir);

// ---- outcomes ----

std::vector<ScenarioCellOutcome> cell_outcomes(std::span<const CellScore> cells);
std::vector<ScenarioCellOutcome> run_outcomes(const std::filesystem::path& scores_dir,
                                              const std::filesystem::path& out_dir, bool per_language);
std::vector<ScenarioCellOutcome> read_outcomes(const std::filesystem::path& outcomes_dir);

// ---- report ----

// Writes every table in every format plus heatmap grids and edge lists. Returns relative paths written.
std::vector<std::string> run_report(const std::filesystem::path& scores_dir, const std::filesystem::path& outcomes_dir,
                                    const ReportOptions& options, const std::filesystem::path& out_dir);

// ---- pipeline ----

struct PipelineOptions {
    std::vector<Stage> stages{std::begin(kAllStages), std::end(kAllStages)};
    bool resume = false;
    bool force = false;
};

struct StageOutcome {
    Stage stage;
    bool skipped = false;  // unchanged inputs, nothing to do
    std::string summary;
};

// Runs the requested stages in order, updating the manifest after each. Throws StageError when a
// stage cannot run or fails, ConfigError on invalid configuration.
std::vector<StageOutcome> run_pipeline(const RunConfig& config, const PipelineOptions& options, std::ostream& log);

}  // namespace secrefine
