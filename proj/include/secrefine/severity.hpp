#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "secrefine/finding.hpp"
#include "secrefine/types.hpp"

namespace secrefine {

class SeverityError : public Error {
public:
    using Error::Error;
};

struct SeverityEntry {
    double score = 0.0;
    std::string provenance;
};

class SeverityTable {
public:
    SeverityTable() = default;
    explicit SeverityTable(std::map<CweId, SeverityEntry> entries);

    static SeverityTable parse(const nlohmann::json& doc, const std::string& origin = "<severity table>");
    static SeverityTable load(const std::filesystem::path& path);

    // Throws SeverityError naming the CWE when absent.
    double lookup(CweId cwe) const;
    const SeverityEntry& entry(CweId cwe) const;
    bool contains(CweId cwe) const { return entries_.count(cwe) > 0; }
    const std::map<CweId, SeverityEntry>& entries() const { return entries_; }

private:
    std::map<CweId, SeverityEntry> entries_;
};

// 75th percentile, inclusive linear interpolation: rank = p/100 * (n-1) over the sorted list.
double percentile_severity(std::span<const double> cvss_scores, double p = 75.0);

// multiset: every finding instance counts. set: each distinct CWE counts once.
enum class SeverityMode { multiset, set };

double total_severity(std::span<const Finding> findings, const SeverityTable& table,
                      SeverityMode mode = SeverityMode::multiset);
double total_severity(std::span<const CweId> cwes, const SeverityTable& table,
                      SeverityMode mode = SeverityMode::multiset);

// (raw - refined) / raw * 100. 0 when both are 0; nullopt (undefined) when only raw is 0.
std::optional<double> improvement_pct(double raw_total, double refined_total);

enum class Metric { severity, finding_instances, vulnerable_samples };

inline constexpr Metric kAllMetrics[] = {Metric::severity, Metric::finding_instances, Metric::vulnerable_samples};

std::string_view to_string(Metric m);

// Totals over one group of samples (a cell, or all cells of a model/language/technique).
struct SeverityAggregate {
    double total_severity = 0.0;
    long finding_instances = 0;
    long vulnerable_samples = 0;
    long samples = 0;

    double value(Metric m) const;
    SeverityAggregate& operator+=(const SeverityAggregate& o);
};

SeverityAggregate aggregate_records(std::span<const AnalysisRecord> records, const SeverityTable& table,
                                    SeverityMode mode = SeverityMode::multiset);

struct ImprovementResult {
    std::string model_id;
    Language language = Language::python;
    Technique technique = Technique::nep;
    std::optional<double> severity_pct;
    std::optional<double> count_pct;
    std::optional<double> vulnerable_samples_pct;

    std::optional<double> value(Metric m) const;
};

ImprovementResult compare(const std::string& model_id, Language lang, Technique technique,
                          const SeverityAggregate& raw, const SeverityAggregate& refined);

enum class GroupBy { model, language };

// One report row: a group (model or language) with the mean of its defined member values per technique.
struct AggregateRow {
    std::string group;
    std::map<Technique, std::optional<double>> mean;
    std::map<Technique, int> undefined;  // members whose value was undefined
};

// Rows in order of first appearance of each group in `results`. Throws SeverityError on empty input.
std::vector<AggregateRow> aggregate_improvements(std::span<const ImprovementResult> results, GroupBy group_by,
                                                 Metric metric);

std::optional<double> mean_of_defined(std::span<const std::optional<double>> values);

// Fixed-point rendering at `precision` decimals; "N/A" for nullopt; never "-0.00".
std::string format_value(std::optional<double> v, int precision = 2);

}  // namespace secrefine
