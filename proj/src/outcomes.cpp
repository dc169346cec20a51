#include "secrefine/outcomes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace secrefine {

std::string_view to_string(OutcomeCategory c) {
    switch (c) {
        case OutcomeCategory::fully_removed: return "fully_removed";
        case OutcomeCategory::partial_fix: return "partial_fix";
        case OutcomeCategory::not_removed: return "not_removed";
        case OutcomeCategory::no_cwes: return "no_cwes";
        case OutcomeCategory::not_removed_and_introduced: return "not_removed_and_introduced";
        case OutcomeCategory::fully_removed_and_introduced: return "fully_removed_and_introduced";
    }
    return "no_cwes";
}

std::string_view display_name(OutcomeCategory c) {
    switch (c) {
        case OutcomeCategory::fully_removed: return "Fully removed";
        case OutcomeCategory::partial_fix: return "Partial fix";
        case OutcomeCategory::not_removed: return "Not removed";
        case OutcomeCategory::no_cwes: return "No CWEs";
        case OutcomeCategory::not_removed_and_introduced: return "Not removed + introduced";
        case OutcomeCategory::fully_removed_and_introduced: return "Fully removed + introduced";
    }
    return "No CWEs";
}

OutcomeCategory parse_category(std::string_view text) {
    for (auto c : kAllCategories)
        if (to_string(c) == text) return c;
    throw OutcomeError("unknown outcome category '" + std::string(text) + "'");
}

std::pair<CweSet, CweSet> cell_cwe_sets(std::span<const AnalysisRecord> raw_records,
                                        std::span<const AnalysisRecord> refined_records) {
    std::optional<CellKey> raw_cell, refined_cell;
    auto check = [](std::optional<CellKey>& seen, const AnalysisRecord& r) {
        auto cell = CellKey::of(SampleKey::parse(r.sample_key));
        if (seen && *seen != cell) throw OutcomeError("records from different cells: " + seen->str() + " and " + cell.str());
        seen = cell;
    };
    CweSet original, refined;
    for (const auto& r : raw_records) {
        check(raw_cell, r);
        for (const auto& f : r.findings) original.insert(f.cwe);
    }
    for (const auto& r : refined_records) {
        check(refined_cell, r);
        for (const auto& f : r.findings) refined.insert(f.cwe);
    }
    if (raw_cell && raw_cell->technique != Technique::raw) throw OutcomeError(raw_cell->str() + " is not a raw cell");
    if (refined_cell && refined_cell->technique == Technique::raw)
        throw OutcomeError(refined_cell->str() + " is not a refined cell");
    if (raw_cell && refined_cell &&
        std::tie(raw_cell->model_id, raw_cell->language, raw_cell->scenario_id) !=
            std::tie(refined_cell->model_id, refined_cell->language, refined_cell->scenario_id))
        throw OutcomeError("raw cell " + raw_cell->str() + " does not match refined cell " + refined_cell->str());
    return {original, refined};
}

OutcomeCategory categorize(const CweSet& original, const CweSet& refined) {
    std::size_t persisting = 0, introduced = 0;
    for (auto c : refined) (original.count(c) ? persisting : introduced)++;
    if (original.empty()) return refined.empty() ? OutcomeCategory::no_cwes : OutcomeCategory::fully_removed_and_introduced;
    if (persisting == 0) return introduced ? OutcomeCategory::fully_removed_and_introduced : OutcomeCategory::fully_removed;
    if (introduced) return OutcomeCategory::not_removed_and_introduced;
    return persisting == original.size() ? OutcomeCategory::not_removed : OutcomeCategory::partial_fix;
}

ScenarioCellOutcome make_outcome(const CellKey& refined_cell, const CweSet& original, const CweSet& refined) {
    ScenarioCellOutcome o;
    o.cell = refined_cell;
    o.original_cwes = original;
    o.refined_cwes = refined;
    std::set_difference(refined.begin(), refined.end(), original.begin(), original.end(),
                        std::inserter(o.introduced_cwes, o.introduced_cwes.end()));
    o.category = categorize(original, refined);
    o.vacuous_removal = original.empty() && !refined.empty();
    return o;
}

std::vector<DistributionRow> category_distribution(std::span<const ScenarioCellOutcome> outcomes) {
    std::vector<DistributionRow> rows;
    for (const auto& o : outcomes) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const DistributionRow& r) {
            return r.model_id == o.cell.model_id && r.technique == o.cell.technique;
        });
        if (it == rows.end()) {
            DistributionRow r;
            r.model_id = o.cell.model_id;
            r.technique = o.cell.technique;
            for (auto c : kAllCategories) r.counts[c] = 0;
            rows.push_back(std::move(r));
            it = rows.end() - 1;
        }
        ++it->cells;
        ++it->counts[o.category];
        if (o.vacuous_removal) ++it->vacuous_removals;
    }
    for (auto& r : rows)
        for (auto c : kAllCategories)
            r.percent[c] = 100.0 * static_cast<double>(r.counts[c]) / static_cast<double>(r.cells);
    return rows;
}

double cramers_v(const Contingency2x2& t) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0) throw OutcomeError("negative contingency count");
    if (t.n() == 0) throw OutcomeError("Cramer's V of an empty table");
    const double r1 = static_cast<double>(t.a + t.b), r2 = static_cast<double>(t.c + t.d);
    const double c1 = static_cast<double>(t.a + t.c), c2 = static_cast<double>(t.b + t.d);
    if (r1 == 0 || r2 == 0 || c1 == 0 || c2 == 0) return 0.0;
    const double num = std::fabs(static_cast<double>(t.a) * static_cast<double>(t.d) -
                                 static_cast<double>(t.b) * static_cast<double>(t.c));
    return std::min(1.0, num / std::sqrt(r1 * r2 * c1 * c2));
}

AssociationMatrix association_matrix(std::span<const ScenarioCellOutcome> outcomes) {
    AssociationMatrix m;
    CweSet xs, ys;
    for (const auto& o : outcomes) {
        xs.insert(o.original_cwes.begin(), o.original_cwes.end());
        ys.insert(o.introduced_cwes.begin(), o.introduced_cwes.end());
    }
    m.rows.assign(xs.begin(), xs.end());
    m.cols.assign(ys.begin(), ys.end());
    for (auto x : m.rows) {
        std::vector<AssociationResult> row;
        for (auto y : m.cols) {
            Contingency2x2 t;
            for (const auto& o : outcomes) {
                const bool hx = o.original_cwes.count(x) > 0, hy = o.introduced_cwes.count(y) > 0;
                (hx ? (hy ? t.a : t.b) : (hy ? t.c : t.d))++;
            }
            row.push_back({x, y, t.n() ? cramers_v(t) : 0.0, t.n()});
        }
        m.cells.push_back(std::move(row));
    }
    return m;
}

std::vector<NetworkEdge> network_edges(std::span<const ScenarioCellOutcome> outcomes) {
    std::map<std::pair<CweId, CweId>, long> weights;
    for (const auto& o : outcomes)
        for (auto x : o.original_cwes)
            for (auto y : o.introduced_cwes) ++weights[{x, y}];
    std::vector<NetworkEdge> edges;
    for (const auto& [k, w] : weights) edges.push_back({k.first, k.second, w});
    return edges;
}

}  // namespace secrefine
