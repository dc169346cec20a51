#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "secrefine/types.hpp"

namespace secrefine {

enum class FindingSource { external_sarif, builtin, manual_override };

std::string_view to_string(FindingSource s);
FindingSource parse_finding_source(std::string_view text);

struct Finding {
    CweId cwe;
    std::string file;  // relative to the sample store root
    int start_line = 1;
    int end_line = 1;
    std::string rule_id;
    std::string message;
    FindingSource source = FindingSource::builtin;

    // Uniqueness key inside one AnalysisRecord.
    auto identity() const { return std::tie(cwe, file, start_line, rule_id); }
};

// Sorts by identity and drops later duplicates. Deterministic regardless of input order.
void dedup_findings(std::vector<Finding>& findings);

struct AnalysisRecord {
    std::string sample_key;
    std::vector<Finding> findings;
    std::vector<Finding> suppressed;  // removed by the override ledger, kept for re-application
    std::map<std::string, std::string> analyzer_versions;
    std::vector<std::string> warnings;

    CweSet cwes() const;
};

struct CweDiff {
    CweSet persisting;
    CweSet removed;
    CweSet introduced;
};

CweDiff diff_findings(const CweSet& raw, const CweSet& refined);

nlohmann::json to_json(const Finding& f);
Finding finding_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AnalysisRecord& r);
AnalysisRecord record_from_json(const nlohmann::json& j);

}  // namespace secrefine
