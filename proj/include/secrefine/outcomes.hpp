#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "secrefine/finding.hpp"
#include "secrefine/types.hpp"

namespace secrefine {

class OutcomeError : public Error {
public:
    using Error::Error;
};

enum class OutcomeCategory {
    fully_removed,
    partial_fix,
    not_removed,
    no_cwes,
    not_removed_and_introduced,
    fully_removed_and_introduced,
};

inline constexpr OutcomeCategory kAllCategories[] = {
    OutcomeCategory::fully_removed,
    OutcomeCategory::partial_fix,
    OutcomeCategory::not_removed,
    OutcomeCategory::no_cwes,
    OutcomeCategory::not_removed_and_introduced,
    OutcomeCategory::fully_removed_and_introduced,
};

std::string_view to_string(OutcomeCategory c);
// Column heading used in report tables.
std::string_view display_name(OutcomeCategory c);
OutcomeCategory parse_category(std::string_view text);

struct ScenarioCellOutcome {
    CellKey cell;  // the refined cell; its raw counterpart shares model, language and scenario
    CweSet original_cwes;
    CweSet refined_cwes;
    CweSet introduced_cwes;
    OutcomeCategory category = OutcomeCategory::no_cwes;
    bool vacuous_removal = false;  // original empty, refined not
};

// Union of CWE types over the raw and refined samples of one (model, language, scenario).
// Throws OutcomeError when the records mix cells or the refined side is raw.
std::pair<CweSet, CweSet> cell_cwe_sets(std::span<const AnalysisRecord> raw_records,
                                        std::span<const AnalysisRecord> refined_records);

OutcomeCategory categorize(const CweSet& original, const CweSet& refined);

ScenarioCellOutcome make_outcome(const CellKey& refined_cell, const CweSet& original, const CweSet& refined);

struct DistributionRow {
    std::string model_id;
    Technique technique = Technique::nep;
    long cells = 0;
    long vacuous_removals = 0;
    std::map<OutcomeCategory, long> counts;
    std::map<OutcomeCategory, double> percent;
};

// One row per (model, technique) in first-appearance order.
std::vector<DistributionRow> category_distribution(std::span<const ScenarioCellOutcome> outcomes);

struct Contingency2x2 {
    long a = 0, b = 0, c = 0, d = 0;  // rows: X present/absent; columns: Y present/absent
    long n() const { return a + b + c + d; }
};

double cramers_v(const Contingency2x2& t);

struct AssociationResult {
    CweId original_cwe;
    CweId introduced_cwe;
    double cramers_v = 0.0;
    long n = 0;
};

struct AssociationMatrix {
    std::vector<CweId> rows;  // original CWEs, ascending
    std::vector<CweId> cols;  // introduced CWEs, ascending
    std::vector<std::vector<AssociationResult>> cells;
};

AssociationMatrix association_matrix(std::span<const ScenarioCellOutcome> outcomes);

struct NetworkEdge {
    CweId original;
    CweId introduced;
    long weight = 0;

    auto operator<=>(const NetworkEdge&) const = default;
};

std::vector<NetworkEdge> network_edges(std::span<const ScenarioCellOutcome> outcomes);

}  // namespace secrefine
