#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "secrefine/orchestrator.hpp"
#include "secrefine/provider.hpp"
#include "secrefine/sarif.hpp"
#include "secrefine/severity.hpp"

namespace secrefine {

class ConfigError : public Error {
public:
    using Error::Error;
};

struct ProviderConfig {
    std::string name;
    std::string type;                  // "replay" | "http"
    std::filesystem::path fixtures;    // replay
    HttpEndpoint http;                 // http
    ProviderSettings settings;
};

enum class Format { csv, json, markdown };

std::string_view to_string(Format f);
Format parse_format(std::string_view text);  // throws ConfigError("unsupported format ...")

struct ReportOptions {
    std::vector<Format> formats{Format::csv, Format::json, Format::markdown};
    int precision = 2;
    bool per_language_associations = false;
};

// Paths are resolved against the directory holding the config file.
struct RunConfig {
    std::filesystem::path config_path;
    std::filesystem::path corpus_path;
    std::filesystem::path rules_path;
    std::filesystem::path severity_table_path;
    std::optional<std::filesystem::path> overrides_path;
    std::optional<std::filesystem::path> sarif_dir;
    std::optional<std::string> analyzer_command;  // may use {samples} and {sarif}
    std::filesystem::path output_root;

    std::vector<ModelSpec> models;
    RunPlan plan;
    std::map<std::string, ProviderConfig> providers;
    Exclusions exclusions;

    std::string system_prompt;
    std::map<std::string, std::string> sampling;
    int max_attempts = 3;
    int backoff_ms = 250;

    CweMapping cwe_mapping;
    SeverityMode severity_mode = SeverityMode::multiset;
    ReportOptions report;

    nlohmann::json raw;

    const ModelSpec* find_model(const std::string& id) const;
    std::filesystem::path samples_dir() const { return output_root / "samples"; }
    std::filesystem::path analysis_dir() const { return output_root / "analysis"; }
    std::filesystem::path scores_dir() const { return output_root / "scores"; }
    std::filesystem::path outcomes_dir() const { return output_root / "outcomes"; }
    std::filesystem::path report_dir() const { return output_root / "report"; }
    std::filesystem::path run_dir() const { return output_root / "run"; }
    std::filesystem::path manifest_path() const { return output_root / "manifest.json"; }
};

RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);

struct ConfigReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
};

// Checks corpus, rule pack, severity table, ledger and model references.
ConfigReport validate_config(const RunConfig& config);

// One handle per ModelSpec id; models sharing a provider entry share the instance.
std::map<std::string, ProviderHandle> make_providers(const RunConfig& config);

ExecuteOptions execute_options(const RunConfig& config);

}  // namespace secrefine
