#include "secrefine/finding.hpp"

#include <algorithm>

namespace secrefine {

using nlohmann::json;

std::string_view to_string(FindingSource s) {
    switch (s) {
        case FindingSource::external_sarif: return "external_sarif";
        case FindingSource::builtin: return "builtin";
        case FindingSource::manual_override: return "manual_override";
    }
    return "builtin";
}

FindingSource parse_finding_source(std::string_view text) {
    if (text == "external_sarif") return FindingSource::external_sarif;
    if (text == "builtin") return FindingSource::builtin;
    if (text == "manual_override") return FindingSource::manual_override;
    throw Error("unknown finding source '" + std::string(text) + "'");
}

void dedup_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.identity() != b.identity()) return a.identity() < b.identity();
        return std::tie(a.end_line, a.message) < std::tie(b.end_line, b.message);
    });
    findings.erase(std::unique(findings.begin(), findings.end(),
                               [](const Finding& a, const Finding& b) { return a.identity() == b.identity(); }),
                   findings.end());
}

CweSet AnalysisRecord::cwes() const {
    CweSet out;
    for (const auto& f : findings) out.insert(f.cwe);
    return out;
}

CweDiff diff_findings(const CweSet& raw, const CweSet& refined) {
    CweDiff d;
    std::set_intersection(raw.begin(), raw.end(), refined.begin(), refined.end(),
                          std::inserter(d.persisting, d.persisting.end()));
    std::set_difference(raw.begin(), raw.end(), refined.begin(), refined.end(),
                        std::inserter(d.removed, d.removed.end()));
    std::set_difference(refined.begin(), refined.end(), raw.begin(), raw.end(),
                        std::inserter(d.introduced, d.introduced.end()));
    return d;
}

json to_json(const Finding& f) {
    return {{"cwe", f.cwe.str()},         {"file", f.file},       {"start_line", f.start_line},
            {"end_line", f.end_line},     {"rule_id", f.rule_id}, {"message", f.message},
            {"source", std::string(to_string(f.source))}};
}

Finding finding_from_json(const json& j) {
    Finding f;
    f.cwe = CweId::parse(j.at("cwe").get<std::string>());
    f.file = j.value("file", "");
    f.start_line = j.at("start_line").get<int>();
    f.end_line = j.value("end_line", f.start_line);
    f.rule_id = j.value("rule_id", "");
    f.message = j.value("message", "");
    f.source = parse_finding_source(j.value("source", "builtin"));
    if (f.start_line < 1 || f.end_line < f.start_line)
        throw Error("finding " + f.cwe.str() + " has invalid line range");
    return f;
}

json to_json(const AnalysisRecord& r) {
    json findings = json::array(), suppressed = json::array();
    for (const auto& f : r.findings) findings.push_back(to_json(f));
    for (const auto& f : r.suppressed) suppressed.push_back(to_json(f));
    return {{"sample_key", r.sample_key},
            {"findings", findings},
            {"suppressed", suppressed},
            {"analyzer_versions", r.analyzer_versions},
            {"warnings", r.warnings}};
}

AnalysisRecord record_from_json(const json& j) {
    AnalysisRecord r;
    r.sample_key = j.at("sample_key").get<std::string>();
    for (const auto& f : j.value("findings", json::array())) r.findings.push_back(finding_from_json(f));
    for (const auto& f : j.value("suppressed", json::array())) r.suppressed.push_back(finding_from_json(f));
    r.analyzer_versions = j.value("analyzer_versions", std::map<std::string, std::string>{});
    r.warnings = j.value("warnings", std::vector<std::string>{});
    return r;
}

}  // namespace secrefine
