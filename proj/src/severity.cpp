#include "secrefine/severity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "secrefine/io.hpp"

namespace secrefine {

using nlohmann::json;

SeverityTable::SeverityTable(std::map<CweId, SeverityEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw SeverityError("severity table is empty");
    for (const auto& [cwe, e] : entries_)
        if (!(e.score >= 0.0 && e.score <= 10.0))
            throw SeverityError("severity score for " + cwe.str() + " outside [0, 10]");
}

SeverityTable SeverityTable::parse(const json& doc, const std::string& origin) {
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw SeverityError(origin + ": expected an object with an 'entries' array");
    std::map<CweId, SeverityEntry> entries;
    for (const auto& e : doc["entries"]) {
        try {
            auto cwe = CweId::parse(e.at("cwe").get<std::string>());
            if (entries.count(cwe)) throw SeverityError("duplicate entry " + cwe.str());
            entries[cwe] = {e.at("score").get<double>(), e.value("provenance", "")};
        } catch (const json::exception& ex) {
            throw SeverityError(origin + ": " + ex.what());
        } catch (const SeverityError& ex) {
            throw SeverityError(origin + ": " + ex.what());
        } catch (const Error& ex) {
            throw SeverityError(origin + ": " + ex.what());
        }
    }
    try {
        return SeverityTable(std::move(entries));
    } catch (const SeverityError& ex) {
        throw SeverityError(origin + ": " + ex.what());
    }
}

SeverityTable SeverityTable::load(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(io::read_file(path));
    } catch (const json::exception& e) {
        throw SeverityError(path.string() + ": " + e.what());
    }
    return parse(doc, path.string());
}

const SeverityEntry& SeverityTable::entry(CweId cwe) const {
    auto it = entries_.find(cwe);
    if (it == entries_.end()) throw SeverityError(cwe.str() + " is absent from the severity table");
    return it->second;
}

double SeverityTable::lookup(CweId cwe) const { return entry(cwe).score; }

double percentile_severity(std::span<const double> scores, double p) {
    if (scores.empty()) throw SeverityError("percentile of an empty score list");
    for (double s : scores)
        if (!(s >= 0.0 && s <= 10.0)) throw SeverityError("CVSS score outside [0, 10]");
    std::vector<double> v(scores.begin(), scores.end());
    std::sort(v.begin(), v.end());
    const double rank = p / 100.0 * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const auto hi = std::min(lo + 1, v.size() - 1);
    const double frac = rank - static_cast<double>(lo);
    return v[lo] + (v[hi] - v[lo]) * frac;
}

double total_severity(std::span<const CweId> cwes, const SeverityTable& table, SeverityMode mode) {
    double total = 0.0;
    if (mode == SeverityMode::set) {
        for (auto c : CweSet(cwes.begin(), cwes.end())) total += table.lookup(c);
    } else {
        for (auto c : cwes) total += table.lookup(c);
    }
    return total;
}

double total_severity(std::span<const Finding> findings, const SeverityTable& table, SeverityMode mode) {
    std::vector<CweId> cwes;
    cwes.reserve(findings.size());
    for (const auto& f : findings) cwes.push_back(f.cwe);
    return total_severity(std::span<const CweId>(cwes), table, mode);
}

std::optional<double> improvement_pct(double raw_total, double refined_total) {
    if (raw_total < 0 || refined_total < 0) throw SeverityError("improvement of a negative total");
    if (raw_total == 0) {
        if (refined_total == 0) return 0.0;
        return std::nullopt;
    }
    return (raw_total - refined_total) / raw_total * 100.0;
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::severity: return "severity";
        case Metric::finding_instances: return "finding_instances";
        case Metric::vulnerable_samples: return "vulnerable_samples";
    }
    return "severity";
}

double SeverityAggregate::value(Metric m) const {
    switch (m) {
        case Metric::severity: return total_severity;
        case Metric::finding_instances: return static_cast<double>(finding_instances);
        case Metric::vulnerable_samples: return static_cast<double>(vulnerable_samples);
    }
    return 0.0;
}

SeverityAggregate& SeverityAggregate::operator+=(const SeverityAggregate& o) {
    total_severity += o.total_severity;
    finding_instances += o.finding_instances;
    vulnerable_samples += o.vulnerable_samples;
    samples += o.samples;
    return *this;
}

SeverityAggregate aggregate_records(std::span<const AnalysisRecord> records, const SeverityTable& table,
                                    SeverityMode mode) {
    SeverityAggregate a;
    for (const auto& r : records) {
        a.total_severity += total_severity(std::span<const Finding>(r.findings), table, mode);
        a.finding_instances += static_cast<long>(r.findings.size());
        a.vulnerable_samples += r.findings.empty() ? 0 : 1;
        ++a.samples;
    }
    return a;
}

std::optional<double> ImprovementResult::value(Metric m) const {
    switch (m) {
        case Metric::severity: return severity_pct;
        case Metric::finding_instances: return count_pct;
        case Metric::vulnerable_samples: return vulnerable_samples_pct;
    }
    return std::nullopt;
}

ImprovementResult compare(const std::string& model_id, Language lang, Technique technique,
                          const SeverityAggregate& raw, const SeverityAggregate& refined) {
    ImprovementResult r;
    r.model_id = model_id;
    r.language = lang;
    r.technique = technique;
    r.severity_pct = improvement_pct(raw.total_severity, refined.total_severity);
    r.count_pct = improvement_pct(static_cast<double>(raw.finding_instances),
                                  static_cast<double>(refined.finding_instances));
    r.vulnerable_samples_pct = improvement_pct(static_cast<double>(raw.vulnerable_samples),
                                               static_cast<double>(refined.vulnerable_samples));
    return r;
}

std::optional<double> mean_of_defined(std::span<const std::optional<double>> values) {
    double sum = 0.0;
    int n = 0;
    for (const auto& v : values)
        if (v) {
            sum += *v;
            ++n;
        }
    if (n == 0) return std::nullopt;
    return sum / n;
}

std::vector<AggregateRow> aggregate_improvements(std::span<const ImprovementResult> results, GroupBy group_by,
                                                 Metric metric) {
    if (results.empty()) throw SeverityError("cannot aggregate an empty group");
    std::vector<std::string> order;
    std::map<std::string, std::map<Technique, std::vector<std::optional<double>>>> members;
    for (const auto& r : results) {
        auto key = group_by == GroupBy::model ? r.model_id : std::string(to_string(r.language));
        if (!members.count(key)) order.push_back(key);
        members[key][r.technique].push_back(r.value(metric));
    }
    std::vector<AggregateRow> rows;
    for (const auto& key : order) {
        AggregateRow row;
        row.group = key;
        for (const auto& [t, vals] : members[key]) {
            row.mean[t] = mean_of_defined(vals);
            row.undefined[t] = static_cast<int>(std::count(vals.begin(), vals.end(), std::nullopt));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_value(std::optional<double> v, int precision) {
    if (!v) return "N/A";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, *v);
    std::string s = buf;
    if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

}  // namespace secrefine
