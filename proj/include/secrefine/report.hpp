#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "secrefine/config.hpp"
#include "secrefine/finding.hpp"
#include "secrefine/outcomes.hpp"
#include "secrefine/severity.hpp"

namespace secrefine {

// A rendered table. Cells are already formatted text; `metric` names what the numbers measure.
struct Table {
    std::string name;  // file stem
    std::string title;
    std::string metric;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

std::string render_csv(const Table& t);
std::string render_markdown(const Table& t);
std::string render_json(const Table& t);
std::string render(const Table& t, Format format);

// Writes <dir>/<name>.<ext> for every format. Returns the written paths.
std::vector<std::filesystem::path> write_table(const Table& t, const std::filesystem::path& dir,
                                               std::span<const Format> formats);

inline constexpr std::string_view kUndefined = "undefined";

std::string metric_label(Metric m);

// Model | Language | NEP | CoT | MP | FT rows per group plus an Average row, for one metric.
// Techniques with no result for a member render as N/A; results whose value is undefined render
// as "undefined".
Table improvement_table(std::span<const ImprovementResult> results, GroupBy group_by, Metric metric,
                        int precision = 2);

// Model | Technique | six category percentages | Cells | Vacuous removals.
Table category_table(std::span<const DistributionRow> rows, int precision = 2);

// Scored totals of one (model, technique, language, scenario) cell.
struct CellScore {
    CellKey cell;
    SeverityAggregate totals;
    CweSet cwes;  // union over the cell's samples
    std::map<CweId, long> cwe_counts;  // finding instances per CWE
};

// Finding instances per CWE over raw-technique cells, one column per language or model.
Table raw_frequency_table(std::span<const CellScore> cells, GroupBy group_by);

// Labeled grid: header "original\introduced,CWE-a,...", one row per original CWE.
std::string render_heatmap(const AssociationMatrix& m, int precision = 2);
// "source,target,weight" rows in edge order.
std::string render_edges(std::span<const NetworkEdge> edges);

}  // namespace secrefine
