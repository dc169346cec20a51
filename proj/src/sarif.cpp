#include "secrefine/sarif.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

namespace secrefine {

using nlohmann::json;

namespace {

struct RuleInfo {
    std::optional<CweId> cwe;
};

std::string normalize_uri(std::string uri, const std::string& prefix) {
    if (uri.starts_with("file://")) uri.erase(0, 7);
    while (uri.starts_with("./")) uri.erase(0, 2);
    if (!prefix.empty() && uri.find('/') == std::string::npos) uri = prefix + "/" + uri;
    return uri;
}

std::optional<CweId> cwe_of_tags(const json& props) {
    if (!props.is_object() || !props.contains("tags") || !props["tags"].is_array()) return std::nullopt;
    for (const auto& t : props["tags"])
        if (t.is_string())
            if (auto c = cwe_from_tag(t.get<std::string>())) return c;
    return std::nullopt;
}

void collect_rules(const json& component, std::vector<RuleInfo>& indexed, std::map<std::string, RuleInfo>& by_id) {
    if (!component.is_object() || !component.contains("rules")) return;
    for (const auto& r : component["rules"]) {
        RuleInfo info{cwe_of_tags(r.value("properties", json::object()))};
        indexed.push_back(info);
        if (r.contains("id")) by_id[r["id"].get<std::string>()] = info;
    }
}

}  // namespace

std::optional<CweId> cwe_from_tag(std::string_view tag) {
    constexpr std::string_view prefix = "external/cwe/cwe-";
    if (tag.size() <= prefix.size()) return std::nullopt;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(tag[i])) != prefix[i]) return std::nullopt;
    return CweId::try_parse(tag.substr(prefix.size()));
}

SarifIngest ingest_sarif(std::string_view document, const CweMapping& mapping, const std::string& uri_prefix) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw SarifError(std::string("malformed SARIF: ") + e.what());
    }
    if (!doc.is_object() || doc.value("version", "") != "2.1.0")
        throw SarifError("malformed SARIF: version must be 2.1.0");
    if (!doc.contains("runs") || !doc["runs"].is_array()) throw SarifError("malformed SARIF: missing runs array");

    SarifIngest out;
    for (const auto& run : doc["runs"]) {
        if (!run.is_object() || !run.contains("tool")) throw SarifError("malformed SARIF: run without tool");
        const auto& driver = run["tool"].value("driver", json::object());
        out.tools[driver.value("name", "unknown")] = driver.value("semanticVersion", driver.value("version", ""));

        std::vector<RuleInfo> indexed;
        std::map<std::string, RuleInfo> by_id;
        collect_rules(driver, indexed, by_id);
        for (const auto& ext : run["tool"].value("extensions", json::array())) collect_rules(ext, indexed, by_id);

        const auto& results = run.value("results", json::array());
        for (std::size_t n = 0; n < results.size(); ++n) {
            const auto& res = results[n];
            std::string rule_id = res.value("ruleId", "");
            if (rule_id.empty() && res.contains("rule")) rule_id = res["rule"].value("id", "");

            std::optional<CweId> cwe;
            bool known = false;
            if (auto it = by_id.find(rule_id); it != by_id.end()) {
                known = true;
                cwe = it->second.cwe;
            } else if (res.contains("ruleIndex") && res["ruleIndex"].is_number_integer()) {
                auto idx = res["ruleIndex"].get<long>();
                if (idx >= 0 && static_cast<std::size_t>(idx) < indexed.size()) {
                    known = true;
                    cwe = indexed[idx].cwe;
                }
            }
            if (!known)
                out.warnings.push_back("result " + std::to_string(n) + ": unknown rule id '" + rule_id + "'");
            if (!cwe) cwe = cwe_of_tags(res.value("properties", json::object()));
            if (!cwe)
                if (auto it = mapping.find(rule_id); it != mapping.end()) cwe = it->second;
            if (!cwe) {
                ++out.unmapped_results;
                continue;
            }

            std::string message;
            if (res.contains("message")) message = res["message"].value("text", "");
            std::set<std::pair<std::string, int>> seen;
            for (const auto& loc : res.value("locations", json::array())) {
                const auto& phys = loc.value("physicalLocation", json::object());
                auto uri = phys.value("artifactLocation", json::object()).value("uri", "");
                const auto& region = phys.value("region", json::object());
                int start = region.value("startLine", 0);
                if (uri.empty() || start < 1) {
                    out.warnings.push_back("result " + std::to_string(n) + ": location without file or line");
                    continue;
                }
                Finding f;
                f.cwe = *cwe;
                f.file = normalize_uri(uri, uri_prefix);
                f.start_line = start;
                f.end_line = std::max(start, region.value("endLine", start));
                f.rule_id = rule_id;
                f.message = message;
                f.source = FindingSource::external_sarif;
                if (seen.insert({f.file, f.start_line}).second) out.findings.push_back(std::move(f));
            }
        }
    }
    dedup_findings(out.findings);
    return out;
}

}  // namespace secrefine
