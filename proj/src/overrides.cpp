#include "secrefine/overrides.hpp"

#include <algorithm>

#include <json.hpp>

#include "secrefine/io.hpp"

namespace secrefine {

using nlohmann::json;

std::string OverrideEntry::describe() const {
    std::string where = line > 0 ? "ledger line " + std::to_string(line) : "ledger entry";
    return where + " (" + (action == OverrideAction::add ? "add " : "suppress ") + finding.cwe.str() + " at " +
           finding.file + ":" + std::to_string(finding.start_line) + " rule '" + finding.rule_id + "' for " +
           sample_key + ")";
}

OverrideLedger OverrideLedger::load(const std::filesystem::path& path) {
    std::vector<OverrideEntry> entries;
    int n = 0;
    for (const auto& text : io::split_lines(io::read_file(path))) {
        ++n;
        if (text.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            auto j = json::parse(text);
            OverrideEntry e;
            e.sample_key = j.at("sample_key").get<std::string>();
            auto action = j.at("action").get<std::string>();
            if (action == "add") e.action = OverrideAction::add;
            else if (action == "suppress") e.action = OverrideAction::suppress;
            else throw LedgerError("unknown action '" + action + "'");
            e.finding = finding_from_json(j.at("finding"));
            e.reviewer = j.value("reviewer", "");
            e.note = j.value("note", "");
            e.line = n;
            entries.push_back(std::move(e));
        } catch (const std::exception& ex) {
            throw LedgerError(path.string() + ": ledger line " + std::to_string(n) + ": " + ex.what());
        }
    }
    return OverrideLedger(std::move(entries));
}

void OverrideLedger::append(const std::filesystem::path& path, const OverrideEntry& e) {
    json j{{"sample_key", e.sample_key},
           {"action", e.action == OverrideAction::add ? "add" : "suppress"},
           {"finding", to_json(e.finding)},
           {"reviewer", e.reviewer},
           {"note", e.note}};
    io::append_line(path, j.dump());
}

std::vector<OverrideEntry> OverrideLedger::for_sample(const std::string& sample_key) const {
    std::vector<OverrideEntry> out;
    for (const auto& e : entries_)
        if (e.sample_key == sample_key) out.push_back(e);
    return out;
}

AnalysisRecord apply_overrides(const AnalysisRecord& record, const OverrideLedger& ledger) {
    // Reconstruct the automated findings so re-application starts from the same base.
    std::vector<Finding> base;
    for (const auto& f : record.findings)
        if (f.source != FindingSource::manual_override) base.push_back(f);
    base.insert(base.end(), record.suppressed.begin(), record.suppressed.end());
    dedup_findings(base);

    auto find = [](std::vector<Finding>& v, const Finding& f) {
        return std::find_if(v.begin(), v.end(), [&](const Finding& g) { return g.identity() == f.identity(); });
    };

    AnalysisRecord out = record;
    out.findings = base;
    out.suppressed.clear();
    std::vector<Finding> added;
    for (const auto& e : ledger.for_sample(record.sample_key)) {
        if (e.action == OverrideAction::suppress) {
            auto it = find(base, e.finding);
            if (it == base.end()) throw LedgerError(e.describe() + ": suppressed finding is not present");
            auto live = find(out.findings, e.finding);
            if (live != out.findings.end()) {
                out.suppressed.push_back(*live);
                out.findings.erase(live);
            }
        } else {
            if (find(base, e.finding) != base.end() || find(added, e.finding) != added.end())
                throw LedgerError(e.describe() + ": added finding already exists");
            Finding f = e.finding;
            f.source = FindingSource::manual_override;
            added.push_back(f);
        }
    }
    out.findings.insert(out.findings.end(), added.begin(), added.end());
    dedup_findings(out.findings);
    dedup_findings(out.suppressed);
    return out;
}

}  // namespace secrefine
