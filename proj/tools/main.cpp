// secrefine command-line interface.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "secrefine/config.hpp"
#include "secrefine/corpus.hpp"
#include "secrefine/manifest.hpp"
#include "secrefine/pipeline.hpp"

namespace fs = std::filesystem;
using namespace secrefine;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kStageFailure = 2;

struct Globals {
    std::string config;
    std::string out;
    std::vector<std::string> formats;
    bool resume = false;
    bool force = false;
};

RunConfig load(const Globals& g) {
    if (g.config.empty()) throw ConfigError("--config is required");
    auto c = load_config(g.config);
    if (!g.out.empty()) c.output_root = fs::absolute(g.out).lexically_normal();
    if (!g.formats.empty()) {
        c.report.formats.clear();
        for (const auto& f : g.formats) c.report.formats.push_back(parse_format(f));
    }
    return c;
}

int pipeline(const Globals& g, std::vector<Stage> stages) {
    auto c = load(g);
    PipelineOptions opts;
    opts.stages = std::move(stages);
    opts.resume = g.resume;
    opts.force = g.force;
    run_pipeline(c, opts, std::cerr);
    return kOk;
}

std::vector<Format> formats_of(const Globals& g) {
    std::vector<Format> out;
    for (const auto& f : g.formats) out.push_back(parse_format(f));
    if (out.empty()) out = ReportOptions{}.formats;
    return out;
}

fs::path require_out(const Globals& g) {
    if (g.out.empty()) throw ConfigError("--out is required without --config");
    return g.out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secure-code refinement evaluation harness"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Globals g;
    app.add_option("--config", g.config, "Run configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", g.out, "Output directory (overrides output_root)");
    app.add_option("--format", g.formats, "Report format: csv, json, markdown (repeatable)");
    app.add_flag("--resume", g.resume, "Reuse samples already in the store");
    app.add_flag("--force", g.force, "Rerun stages whose inputs changed since the manifest");
    app.fallthrough();

    auto* validate_corpus_cmd = app.add_subcommand("validate-corpus", "Check a scenario corpus");
    std::string corpus_dir;
    validate_corpus_cmd->add_option("--corpus", corpus_dir, "Corpus directory (defaults to the config's)");

    auto* validate_cmd = app.add_subcommand("validate", "Check a run configuration and everything it references");

    auto* generate_cmd = app.add_subcommand("generate", "Generate samples for the configured plan");

    auto* analyze_cmd = app.add_subcommand("analyze", "Detect weaknesses in generated samples");
    std::string samples_dir, sarif_dir, rules_file, overrides_file;
    analyze_cmd->add_option("--samples", samples_dir, "Sample store directory");
    analyze_cmd->add_option("--sarif", sarif_dir, "Directory of SARIF logs");
    analyze_cmd->add_option("--rules", rules_file, "Builtin rule pack");
    analyze_cmd->add_option("--overrides", overrides_file, "Override ledger (JSON Lines)");

    auto* score_cmd = app.add_subcommand("score", "Compute severity totals and improvements");
    std::string analysis_dir, severity_file, mode = "multiset";
    score_cmd->add_option("--analysis", analysis_dir, "Directory holding records.jsonl");
    score_cmd->add_option("--severity-table", severity_file, "Severity table");
    score_cmd->add_option("--mode", mode, "multiset or set")->check(CLI::IsMember({"multiset", "set"}));

    auto* outcomes_cmd = app.add_subcommand("analyze-outcomes", "Categorize refinement outcomes per scenario cell");
    std::string scored_dir;
    bool per_language = false;
    outcomes_cmd->add_option("--scored", scored_dir, "Directory holding score outputs");
    outcomes_cmd->add_flag("--per-language", per_language, "Also build associations per language");

    auto* report_cmd = app.add_subcommand("report", "Render tables, heatmap grids and edge lists");
    std::string report_scored, report_outcomes;
    int precision = 2;
    report_cmd->add_option("--scored", report_scored, "Directory holding score outputs");
    report_cmd->add_option("--outcomes", report_outcomes, "Directory holding outcome records");
    report_cmd->add_option("--precision", precision, "Decimal places for percentages")->check(CLI::Range(0, 10));

    auto* pipeline_cmd = app.add_subcommand("pipeline", "Run stages in order, updating the manifest");
    std::vector<std::string> stage_names;
    pipeline_cmd->add_option("--stages", stage_names, "Subset of generate,analyze,score,outcomes,report")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_corpus_cmd) {
            fs::path root = corpus_dir.empty() ? load(g).corpus_path : fs::path(corpus_dir);
            auto violations = validate_corpus(load_corpus_unchecked(root));
            for (const auto& v : violations) std::cout << v.str() << "\n";
            if (violations.empty()) std::cout << "corpus ok: " << root.string() << "\n";
            return violations.empty() ? kOk : kValidation;
        }
        if (*validate_cmd) {
            auto report = validate_config(load(g));
            for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
            for (const auto& e : report.errors) std::cout << "error: " << e << "\n";
            if (report.errors.empty()) std::cout << "config ok\n";
            return report.errors.empty() ? kOk : kValidation;
        }
        if (*generate_cmd) return pipeline(g, {Stage::generate});
        if (*analyze_cmd) {
            if (!g.config.empty() && samples_dir.empty()) return pipeline(g, {Stage::analyze});
            if (samples_dir.empty() || rules_file.empty())
                throw ConfigError("analyze needs --config, or --samples and --rules");
            AnalyzeSettings s;
            s.rules_path = rules_file;
            if (!sarif_dir.empty()) s.sarif_dirs.push_back(sarif_dir);
            if (!overrides_file.empty()) s.overrides_path = fs::path(overrides_file);
            auto records = run_analyze(samples_dir, s, require_out(g));
            std::cout << records.size() << " records written\n";
            return kOk;
        }
        if (*score_cmd) {
            if (!g.config.empty() && analysis_dir.empty()) return pipeline(g, {Stage::score});
            if (analysis_dir.empty() || severity_file.empty())
                throw ConfigError("score needs --config, or --analysis and --severity-table");
            auto out = run_score(analysis_dir, SeverityTable::load(severity_file),
                                 mode == "set" ? SeverityMode::set : SeverityMode::multiset, require_out(g));
            std::cout << out.cells.size() << " cells scored\n";
            return kOk;
        }
        if (*outcomes_cmd) {
            if (!g.config.empty() && scored_dir.empty()) return pipeline(g, {Stage::outcomes});
            if (scored_dir.empty()) throw ConfigError("analyze-outcomes needs --config or --scored");
            auto out = run_outcomes(scored_dir, require_out(g), per_language);
            std::cout << out.size() << " refined cells categorized\n";
            return kOk;
        }
        if (*report_cmd) {
            if (!g.config.empty() && report_scored.empty()) return pipeline(g, {Stage::report});
            if (report_scored.empty() || report_outcomes.empty())
                throw ConfigError("report needs --config, or --scored and --outcomes");
            ReportOptions opts;
            opts.formats = formats_of(g);
            opts.precision = precision;
            auto files = run_report(report_scored, report_outcomes, opts, require_out(g));
            std::cout << files.size() << " files written\n";
            return kOk;
        }
        if (*pipeline_cmd) {
            std::vector<Stage> stages;
            for (const auto& s : stage_names) stages.push_back(parse_stage(s));
            if (stages.empty()) stages.assign(std::begin(kAllStages), std::end(kAllStages));
            return pipeline(g, stages);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const CorpusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStageFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStageFailure;
    }
    return kOk;
}
