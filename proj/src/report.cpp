#include "secrefine/report.hpp"

#include <map>
#include <set>

#include "secrefine/io.hpp"

namespace secrefine {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += csv_field(cells[i]);
    }
    return line + "\n";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c == '\n' ? ' ' : c;
    }
    return out;
}

std::string_view extension(Format f) {
    switch (f) {
        case Format::csv: return ".csv";
        case Format::json: return ".json";
        case Format::markdown: return ".md";
    }
    return ".txt";
}

std::string render_cell(const std::optional<double>& v, int precision) {
    return v ? format_value(v, precision) : std::string(kUndefined);
}

}  // namespace

std::string render_csv(const Table& t) {
    std::string out = csv_row(t.columns);
    for (const auto& r : t.rows) out += csv_row(r);
    return out;
}

std::string render_markdown(const Table& t) {
    std::string out = "## " + t.title + "\n\nMetric: " + t.metric + "\n\n|";
    for (const auto& c : t.columns) out += " " + md_cell(c) + " |";
    out += "\n|";
    for (size_t i = 0; i < t.columns.size(); ++i) out += i ? " ---: |" : " --- |";
    out += "\n";
    for (const auto& r : t.rows) {
        out += "|";
        for (const auto& c : r) out += " " + md_cell(c) + " |";
        out += "\n";
    }
    if (!t.notes.empty()) {
        out += "\n";
        for (const auto& n : t.notes) out += "- " + n + "\n";
    }
    return out;
}

std::string render_json(const Table& t) {
    json j = {{"name", t.name}, {"title", t.title}, {"metric", t.metric},
              {"columns", t.columns}, {"rows", t.rows}, {"notes", t.notes}};
    return j.dump(2) + "\n";
}

std::string render(const Table& t, Format format) {
    switch (format) {
        case Format::csv: return render_csv(t);
        case Format::json: return render_json(t);
        case Format::markdown: return render_markdown(t);
    }
    throw ConfigError("unsupported format");
}

std::vector<fs::path> write_table(const Table& t, const fs::path& dir, std::span<const Format> formats) {
    std::vector<fs::path> out;
    for (auto f : formats) {
        auto path = dir / (t.name + std::string(extension(f)));
        io::write_file_atomic(path, render(t, f));
        out.push_back(path);
    }
    return out;
}

std::string metric_label(Metric m) {
    switch (m) {
        case Metric::severity: return "severity-based improvement (%)";
        case Metric::finding_instances: return "instance-count-based improvement (%)";
        case Metric::vulnerable_samples: return "sample-count-based improvement (%)";
    }
    return "";
}

Table improvement_table(std::span<const ImprovementResult> results, GroupBy group_by, Metric metric,
                        int precision) {
    const bool by_model = group_by == GroupBy::model;
    Table t;
    t.name = std::string("improvement_by_") + (by_model ? "model_" : "language_") + std::string(to_string(metric));
    t.title = std::string("Improvement by ") + (by_model ? "model" : "language") + ", " + metric_label(metric);
    t.metric = metric_label(metric);
    t.columns = {by_model ? "Model" : "Language", by_model ? "Language" : "Model"};
    for (auto tech : kRefinementTechniques) t.columns.emplace_back(display_name(tech));

    auto group_of = [&](const ImprovementResult& r) {
        return by_model ? r.model_id : std::string(to_string(r.language));
    };
    auto member_of = [&](const ImprovementResult& r) {
        return by_model ? std::string(to_string(r.language)) : r.model_id;
    };

    std::vector<std::string> groups;
    std::map<std::string, std::vector<std::string>> members;
    std::map<std::tuple<std::string, std::string, Technique>, const ImprovementResult*> index;
    for (const auto& r : results) {
        auto g = group_of(r), m = member_of(r);
        if (!members.count(g)) groups.push_back(g);
        auto& ms = members[g];
        if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
        index[{g, m, r.technique}] = &r;
    }
    if (results.empty()) {
        t.notes.push_back("no improvement results");
        return t;
    }
    auto agg = aggregate_improvements(results, group_by, metric);
    std::map<std::string, const AggregateRow*> agg_by;
    for (const auto& a : agg) agg_by[a.group] = &a;

    int undefined = 0, missing = 0;
    for (const auto& g : groups) {
        bool first = true;
        for (const auto& m : members[g]) {
            std::vector<std::string> row{first ? g : "", m};
            first = false;
            for (auto tech : kRefinementTechniques) {
                auto it = index.find({g, m, tech});
                if (it == index.end()) {
                    ++missing;
                    row.emplace_back("N/A");
                    continue;
                }
                auto v = it->second->value(metric);
                if (!v) ++undefined;
                row.push_back(render_cell(v, precision));
            }
            t.rows.push_back(std::move(row));
        }
        std::vector<std::string> avg{"", "Average"};
        const auto& a = *agg_by.at(g);
        for (auto tech : kRefinementTechniques) {
            auto it = a.mean.find(tech);
            avg.push_back(it == a.mean.end() ? "N/A" : render_cell(it->second, precision));
        }
        t.rows.push_back(std::move(avg));
    }
    if (missing) t.notes.push_back("N/A: technique not run for this model (declared exclusion)");
    if (undefined)
        t.notes.push_back("undefined: raw output had no weaknesses but the refined output did (" +
                          std::to_string(undefined) + " entries); averages skip these");
    return t;
}

Table category_table(std::span<const DistributionRow> rows, int precision) {
    Table t;
    t.name = "category_distribution";
    t.title = "Refinement outcome categories per model and technique";
    t.metric = "percentage of scenario cells";
    t.columns = {"Model", "Technique"};
    for (auto c : kAllCategories) t.columns.emplace_back(display_name(c));
    t.columns.emplace_back("Cells");
    t.columns.emplace_back("Vacuous removals");
    long vacuous = 0;
    for (const auto& r : rows) {
        std::vector<std::string> row{r.model_id, std::string(display_name(r.technique))};
        for (auto c : kAllCategories) {
            auto it = r.percent.find(c);
            row.push_back(format_value(it == r.percent.end() ? 0.0 : it->second, precision));
        }
        row.push_back(std::to_string(r.cells));
        row.push_back(std::to_string(r.vacuous_removals));
        vacuous += r.vacuous_removals;
        t.rows.push_back(std::move(row));
    }
    t.notes.push_back("Vacuous removals: cells whose raw output had no weaknesses but the refined output did; "
                      "counted under '" + std::string(display_name(OutcomeCategory::fully_removed_and_introduced)) +
                      "' (" + std::to_string(vacuous) + " in total)");
    return t;
}

Table raw_frequency_table(std::span<const CellScore> cells, GroupBy group_by) {
    const bool by_model = group_by == GroupBy::model;
    Table t;
    t.name = std::string("raw_cwe_frequency_by_") + (by_model ? "model" : "language");
    t.title = std::string("Weaknesses in raw output by ") + (by_model ? "model" : "language");
    t.metric = "finding instances";

    std::vector<std::string> groups;
    std::map<CweId, std::map<std::string, long>> counts;
    for (const auto& c : cells) {
        if (c.cell.technique != Technique::raw) continue;
        auto g = by_model ? c.cell.model_id : std::string(to_string(c.cell.language));
        if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
        for (const auto& [cwe, n] : c.cwe_counts) counts[cwe][g] += n;
    }
    if (!by_model) {
        std::vector<std::string> ordered;
        for (auto l : kAllLanguages)
            if (std::find(groups.begin(), groups.end(), to_string(l)) != groups.end())
                ordered.emplace_back(to_string(l));
        groups = ordered;
    }
    t.columns = {"CWE"};
    for (const auto& g : groups) t.columns.push_back(g);
    t.columns.emplace_back("Total");
    for (const auto& [cwe, per] : counts) {
        std::vector<std::string> row{cwe.str()};
        long total = 0;
        for (const auto& g : groups) {
            auto it = per.find(g);
            long n = it == per.end() ? 0 : it->second;
            total += n;
            row.push_back(std::to_string(n));
        }
        row.push_back(std::to_string(total));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string render_heatmap(const AssociationMatrix& m, int precision) {
    std::vector<std::string> header{"original\\introduced"};
    for (auto c : m.cols) header.push_back(c.str());
    std::string out = csv_row(header);
    for (size_t i = 0; i < m.rows.size(); ++i) {
        std::vector<std::string> row{m.rows[i].str()};
        for (const auto& cell : m.cells[i]) row.push_back(format_value(cell.cramers_v, precision));
        out += csv_row(row);
    }
    return out;
}

std::string render_edges(std::span<const NetworkEdge> edges) {
    std::string out = "source,target,weight\n";
    for (const auto& e : edges) out += e.original.str() + "," + e.introduced.str() + "," + std::to_string(e.weight) + "\n";
    return out;
}

}  // namespace secrefine
