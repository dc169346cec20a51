#include "secrefine/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include "secrefine/corpus.hpp"
#include "secrefine/io.hpp"
#include "secrefine/manifest.hpp"
#include "secrefine/orchestrator.hpp"
#include "secrefine/overrides.hpp"
#include "secrefine/sample_store.hpp"

namespace secrefine {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::generate: return "generate";
        case Stage::analyze: return "analyze";
        case Stage::score: return "score";
        case Stage::outcomes: return "outcomes";
        case Stage::report: return "report";
    }
    return "?";
}

Stage parse_stage(std::string_view text) {
    for (auto s : kAllStages)
        if (to_string(s) == text) return s;
    throw ConfigError("unknown stage '" + std::string(text) + "'");
}

namespace {

CellKey parse_cell(const std::string& path) {
    return CellKey::of(SampleKey::parse(path + "/sample_0"));
}

json cwe_list(const CweSet& s) {
    json a = json::array();
    for (auto c : s) a.push_back(c.str());
    return a;
}

CweSet cwe_set(const json& a) {
    CweSet s;
    for (const auto& c : a) s.insert(CweId::parse(c.get<std::string>()));
    return s;
}

std::string join_cwes(const CweSet& s) {
    std::string out;
    for (auto c : s) out += (out.empty() ? "" : ";") + c.str();
    return out;
}

json aggregate_json(const SeverityAggregate& a) {
    return {{"total_severity", a.total_severity},
            {"finding_instances", a.finding_instances},
            {"vulnerable_samples", a.vulnerable_samples},
            {"samples", a.samples}};
}

SeverityAggregate aggregate_from(const json& j) {
    SeverityAggregate a;
    a.total_severity = j.at("total_severity").get<double>();
    a.finding_instances = j.at("finding_instances").get<long>();
    a.vulnerable_samples = j.at("vulnerable_samples").get<long>();
    a.samples = j.at("samples").get<long>();
    return a;
}

json optional_json(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
    for (size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
}

std::string file_stem(std::string s) {
    for (auto& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '_') c = '_';
    return s;
}

long line_count(std::string_view code) {
    if (code.empty()) return 0;
    long n = std::count(code.begin(), code.end(), '\n');
    return code.back() == '\n' ? n : n + 1;
}

}  // namespace

// ---- analyze ----

AnalysisRecord analyze_source(const std::string& sample_key, std::string_view code, Language lang,
                              const std::string& file, const RulePack& pack, std::span<const Finding> external) {
    auto scan = scan_builtin(pack, code, lang, file);
    AnalysisRecord r;
    r.sample_key = sample_key;
    r.findings = std::move(scan.findings);
    r.warnings = std::move(scan.warnings);
    const long lines = line_count(code);
    for (const auto& f : external) {
        if (f.start_line > lines) {
            r.warnings.push_back("external finding " + f.cwe.str() + " at line " + std::to_string(f.start_line) +
                                 " is beyond the end of " + file + "; dropped");
            continue;
        }
        r.findings.push_back(f);
    }
    dedup_findings(r.findings);
    r.analyzer_versions["builtin"] = pack.name() + "@" + pack.version();
    return r;
}

std::vector<AnalysisRecord> run_analyze(const fs::path& samples_dir, const AnalyzeSettings& settings,
                                        const fs::path& out_dir) {
    if (!fs::is_directory(samples_dir)) throw StageError("missing generated samples: " + samples_dir.string());
    SampleStore store(samples_dir);
    auto keys = store.keys();
    if (keys.empty()) throw StageError("missing generated samples: " + samples_dir.string());

    auto pack = RulePack::load(settings.rules_path);
    OverrideLedger ledger;
    if (settings.overrides_path && fs::exists(*settings.overrides_path))
        ledger = OverrideLedger::load(*settings.overrides_path);

    auto sarif_dirs = settings.sarif_dirs;
    if (settings.analyzer_command) {
        auto sarif_out = out_dir / "external_sarif";
        fs::create_directories(sarif_out);
        std::string cmd = *settings.analyzer_command;
        replace_all(cmd, "{samples}", fs::absolute(samples_dir).string());
        replace_all(cmd, "{sarif}", fs::absolute(sarif_out).string());
        if (int rc = std::system(cmd.c_str()); rc != 0)
            throw StageError("external analyzer exited with status " + std::to_string(rc) + ": " + cmd);
        sarif_dirs.push_back(sarif_out);
    }

    std::map<std::string, std::vector<Finding>> external;
    std::map<std::string, std::string> tools;
    std::vector<std::string> warnings;
    int unmapped = 0;
    for (const auto& dir : sarif_dirs) {
        if (!fs::is_directory(dir)) continue;
        for (const auto& rel : io::list_files(dir)) {
            if (!rel.ends_with(".sarif")) continue;
            auto prefix = fs::path(rel).parent_path().generic_string();
            auto ingest = ingest_sarif(io::read_file(dir / rel), settings.cwe_mapping, prefix);
            for (auto& f : ingest.findings) external[f.file].push_back(std::move(f));
            for (const auto& w : ingest.warnings) warnings.push_back(rel + ": " + w);
            tools.insert(ingest.tools.begin(), ingest.tools.end());
            unmapped += ingest.unmapped_results;
        }
    }

    std::vector<AnalysisRecord> records(keys.size());
    std::vector<std::string> files(keys.size());
    for (size_t i = 0; i < keys.size(); ++i)
        files[i] = fs::relative(store.code_path(keys[i]), samples_dir).generic_string();

    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < keys.size();) {
            try {
                auto code = io::read_file(store.code_path(keys[i]));
                auto it = external.find(files[i]);
                std::span<const Finding> ext;
                if (it != external.end()) ext = it->second;
                auto rec = analyze_source(keys[i].str(), code, keys[i].language, files[i], pack, ext);
                for (const auto& [name, version] : tools) rec.analyzer_versions[name] = version;
                records[i] = apply_overrides(rec, ledger);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    int threads = settings.threads > 0 ? settings.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, 16);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::set<std::string> known(files.begin(), files.end());
    for (const auto& [file, fs_] : external)
        if (!known.count(file))
            warnings.push_back(std::to_string(fs_.size()) + " SARIF finding(s) for unknown file '" + file + "'");

    std::string lines;
    for (const auto& r : records) lines += to_json(r).dump() + "\n";
    fs::create_directories(out_dir);
    io::write_file_atomic(out_dir / "records.jsonl", lines);
    json summary = {{"samples", records.size()},
                    {"rule_pack", pack.name() + "@" + pack.version()},
                    {"sarif_tools", tools},
                    {"sarif_unmapped_results", unmapped},
                    {"warnings", warnings}};
    io::write_file_atomic(out_dir / "summary.json", summary.dump(2) + "\n");
    return records;
}

std::vector<AnalysisRecord> read_records(const fs::path& analysis_dir) {
    auto path = analysis_dir / "records.jsonl";
    if (!fs::exists(path)) throw StageError("missing analysis records: " + path.string());
    std::vector<AnalysisRecord> out;
    for (const auto& line : io::split_lines(io::read_file(path))) {
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw StageError(path.string() + ": " + e.what());
        }
    }
    return out;
}

// ---- score ----

ScoreOutput score_records(std::span<const AnalysisRecord> records, const SeverityTable& table, SeverityMode mode) {
    std::map<CellKey, std::vector<AnalysisRecord>> by_cell;
    for (const auto& r : records) by_cell[CellKey::of(SampleKey::parse(r.sample_key))].push_back(r);

    ScoreOutput out;
    using Group = std::tuple<std::string, Language>;
    std::map<Group, SeverityAggregate> raw;
    std::map<std::tuple<std::string, Language, Technique>, SeverityAggregate> refined;
    for (const auto& [cell, recs] : by_cell) {
        CellScore s;
        s.cell = cell;
        s.totals = aggregate_records(recs, table, mode);
        for (const auto& r : recs)
            for (const auto& f : r.findings) {
                s.cwes.insert(f.cwe);
                ++s.cwe_counts[f.cwe];
            }
        if (cell.technique == Technique::raw)
            raw[{cell.model_id, cell.language}] += s.totals;
        else
            refined[{cell.model_id, cell.language, cell.technique}] += s.totals;
        out.cells.push_back(std::move(s));
    }
    for (const auto& [key, agg] : refined) {
        const auto& [model, lang, tech] = key;
        auto it = raw.find({model, lang});
        if (it == raw.end()) continue;
        out.improvements.push_back(compare(model, lang, tech, it->second, agg));
    }
    return out;
}

ScoreOutput run_score(const fs::path& analysis_dir, const SeverityTable& table, SeverityMode mode,
                      const fs::path& out_dir) {
    auto records = read_records(analysis_dir);
    if (records.empty()) throw StageError("missing analysis records: " + (analysis_dir / "records.jsonl").string());
    auto out = score_records(records, table, mode);

    json cells = json::array();
    for (const auto& c : out.cells) {
        json counts = json::object();
        for (const auto& [cwe, n] : c.cwe_counts) counts[cwe.str()] = n;
        cells.push_back({{"cell", c.cell.str()}, {"totals", aggregate_json(c.totals)}, {"cwes", cwe_list(c.cwes)},
                         {"cwe_counts", counts}});
    }
    json imps = json::array();
    for (const auto& r : out.improvements)
        imps.push_back({{"model", r.model_id},
                        {"language", to_string(r.language)},
                        {"technique", to_string(r.technique)},
                        {"severity_pct", optional_json(r.severity_pct)},
                        {"count_pct", optional_json(r.count_pct)},
                        {"vulnerable_samples_pct", optional_json(r.vulnerable_samples_pct)}});
    const char* mode_name = mode == SeverityMode::set ? "set" : "multiset";
    fs::create_directories(out_dir);
    io::write_file_atomic(out_dir / "cells.json", json{{"severity_mode", mode_name}, {"cells", cells}}.dump(2) + "\n");
    io::write_file_atomic(out_dir / "improvements.json",
                          json{{"severity_mode", mode_name}, {"results", imps}}.dump(2) + "\n");
    return out;
}

ScoreOutput read_scores(const fs::path& scores_dir) {
    auto cells_path = scores_dir / "cells.json";
    auto imps_path = scores_dir / "improvements.json";
    if (!fs::exists(cells_path) || !fs::exists(imps_path))
        throw StageError("missing score outputs: " + scores_dir.string());
    ScoreOutput out;
    try {
        const auto cells_doc = json::parse(io::read_file(cells_path));
        const auto imps_doc = json::parse(io::read_file(imps_path));
        for (const auto& c : cells_doc.at("cells")) {
            CellScore s;
            s.cell = parse_cell(c.at("cell").get<std::string>());
            s.totals = aggregate_from(c.at("totals"));
            s.cwes = cwe_set(c.at("cwes"));
            for (const auto& [cwe, n] : c.at("cwe_counts").items()) s.cwe_counts[CweId::parse(cwe)] = n.get<long>();
            out.cells.push_back(std::move(s));
        }
        for (const auto& r : imps_doc.at("results")) {
            ImprovementResult i;
            i.model_id = r.at("model").get<std::string>();
            i.language = parse_language(r.at("language").get<std::string>());
            i.technique = parse_technique(r.at("technique").get<std::string>());
            i.severity_pct = optional_from(r.at("severity_pct"));
            i.count_pct = optional_from(r.at("count_pct"));
            i.vulnerable_samples_pct = optional_from(r.at("vulnerable_samples_pct"));
            out.improvements.push_back(std::move(i));
        }
    } catch (const json::exception& e) {
        throw StageError(scores_dir.string() + ": " + e.what());
    }
    return out;
}

// ---- outcomes ----

std::vector<ScenarioCellOutcome> cell_outcomes(std::span<const CellScore> cells) {
    std::map<std::tuple<std::string, Language, int>, const CellScore*> raw;
    for (const auto& c : cells)
        if (c.cell.technique == Technique::raw) raw[{c.cell.model_id, c.cell.language, c.cell.scenario_id}] = &c;
    std::vector<ScenarioCellOutcome> out;
    for (const auto& c : cells) {
        if (c.cell.technique == Technique::raw) continue;
        auto it = raw.find({c.cell.model_id, c.cell.language, c.cell.scenario_id});
        if (it == raw.end()) continue;
        out.push_back(make_outcome(c.cell, it->second->cwes, c.cwes));
    }
    return out;
}

namespace {

json matrix_json(const AssociationMatrix& m) {
    json rows = json::array(), cols = json::array(), values = json::array(), n = json::array();
    for (auto c : m.rows) rows.push_back(c.str());
    for (auto c : m.cols) cols.push_back(c.str());
    for (const auto& r : m.cells) {
        json vr = json::array(), nr = json::array();
        for (const auto& cell : r) {
            vr.push_back(cell.cramers_v);
            nr.push_back(cell.n);
        }
        values.push_back(vr);
        n.push_back(nr);
    }
    return {{"rows", rows}, {"cols", cols}, {"cramers_v", values}, {"n", n}};
}

struct OutcomeGroup {
    std::string model;
    Technique technique;
    std::optional<Language> language;
    std::vector<ScenarioCellOutcome> members;

    std::string stem() const {
        auto s = file_stem(model) + "__" + std::string(to_string(technique));
        if (language) s += "__" + std::string(to_string(*language));
        return s;
    }
};

std::vector<OutcomeGroup> group_outcomes(std::span<const ScenarioCellOutcome> outcomes, bool per_language) {
    std::vector<OutcomeGroup> groups;
    auto add = [&](const ScenarioCellOutcome& o, std::optional<Language> lang) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const OutcomeGroup& g) {
            return g.model == o.cell.model_id && g.technique == o.cell.technique && g.language == lang;
        });
        if (it == groups.end()) {
            groups.push_back({o.cell.model_id, o.cell.technique, lang, {}});
            it = std::prev(groups.end());
        }
        it->members.push_back(o);
    };
    for (const auto& o : outcomes) add(o, std::nullopt);
    if (per_language)
        for (const auto& o : outcomes) add(o, o.cell.language);
    return groups;
}

}  // namespace

std::vector<ScenarioCellOutcome> run_outcomes(const fs::path& scores_dir, const fs::path& out_dir, bool per_language) {
    auto scores = read_scores(scores_dir);
    auto outcomes = cell_outcomes(scores.cells);

    std::string jsonl, csv = "cell,original,refined,introduced,category,vacuous_removal\n";
    for (const auto& o : outcomes) {
        json j = {{"cell", o.cell.str()},
                  {"original", cwe_list(o.original_cwes)},
                  {"refined", cwe_list(o.refined_cwes)},
                  {"introduced", cwe_list(o.introduced_cwes)},
                  {"category", to_string(o.category)},
                  {"vacuous_removal", o.vacuous_removal}};
        jsonl += j.dump() + "\n";
        csv += o.cell.str() + "," + join_cwes(o.original_cwes) + "," + join_cwes(o.refined_cwes) + "," +
               join_cwes(o.introduced_cwes) + "," + std::string(to_string(o.category)) + "," +
               (o.vacuous_removal ? "true" : "false") + "\n";
    }

    json dist = json::array();
    if (!outcomes.empty())
        for (const auto& r : category_distribution(outcomes)) {
            json counts = json::object(), percent = json::object();
            for (auto c : kAllCategories) {
                counts[std::string(to_string(c))] = r.counts.count(c) ? r.counts.at(c) : 0;
                percent[std::string(to_string(c))] = r.percent.count(c) ? r.percent.at(c) : 0.0;
            }
            dist.push_back({{"model", r.model_id},
                            {"technique", to_string(r.technique)},
                            {"cells", r.cells},
                            {"vacuous_removals", r.vacuous_removals},
                            {"counts", counts},
                            {"percent", percent}});
        }

    json assoc = json::array(), edges = json::array();
    for (const auto& g : group_outcomes(outcomes, per_language)) {
        json head = {{"model", g.model}, {"technique", to_string(g.technique)},
                     {"language", g.language ? json(to_string(*g.language)) : json("all")}};
        json a = head;
        a["matrix"] = matrix_json(association_matrix(g.members));
        assoc.push_back(a);
        json e = head;
        e["edges"] = json::array();
        for (const auto& edge : network_edges(g.members))
            e["edges"].push_back({{"source", edge.original.str()}, {"target", edge.introduced.str()}, {"weight", edge.weight}});
        edges.push_back(e);
    }

    fs::create_directories(out_dir);
    io::write_file_atomic(out_dir / "cells.jsonl", jsonl);
    io::write_file_atomic(out_dir / "cells.csv", csv);
    io::write_file_atomic(out_dir / "distribution.json", dist.dump(2) + "\n");
    io::write_file_atomic(out_dir / "associations.json",
                          json{{"per_language", per_language}, {"groups", assoc}}.dump(2) + "\n");
    io::write_file_atomic(out_dir / "edges.json", edges.dump(2) + "\n");
    return outcomes;
}

std::vector<ScenarioCellOutcome> read_outcomes(const fs::path& outcomes_dir) {
    auto path = outcomes_dir / "cells.jsonl";
    if (!fs::exists(path)) throw StageError("missing outcome records: " + path.string());
    std::vector<ScenarioCellOutcome> out;
    for (const auto& line : io::split_lines(io::read_file(path))) {
        if (line.empty()) continue;
        try {
            auto j = json::parse(line);
            out.push_back(make_outcome(parse_cell(j.at("cell").get<std::string>()), cwe_set(j.at("original")),
                                       cwe_set(j.at("refined"))));
        } catch (const json::exception& e) {
            throw StageError(path.string() + ": " + e.what());
        }
    }
    return out;
}

// ---- report ----

std::vector<std::string> run_report(const fs::path& scores_dir, const fs::path& outcomes_dir,
                                    const ReportOptions& options, const fs::path& out_dir) {
    auto scores = read_scores(scores_dir);
    auto outcomes = read_outcomes(outcomes_dir);
    std::vector<std::string> written;
    auto note = [&](const fs::path& p) { written.push_back(fs::relative(p, out_dir).generic_string()); };

    if (fs::exists(out_dir)) fs::remove_all(out_dir);
    fs::create_directories(out_dir);

    std::vector<Table> tables;
    for (auto metric : kAllMetrics)
        for (auto g : {GroupBy::model, GroupBy::language})
            tables.push_back(improvement_table(scores.improvements, g, metric, options.precision));
    if (!outcomes.empty()) tables.push_back(category_table(category_distribution(outcomes), options.precision));
    tables.push_back(raw_frequency_table(scores.cells, GroupBy::language));
    tables.push_back(raw_frequency_table(scores.cells, GroupBy::model));
    for (const auto& t : tables)
        for (const auto& p : write_table(t, out_dir / "tables", options.formats)) note(p);

    for (const auto& g : group_outcomes(outcomes, options.per_language_associations)) {
        auto m = association_matrix(g.members);
        if (!m.rows.empty() && !m.cols.empty()) {
            auto p = out_dir / "heatmaps" / (g.stem() + ".csv");
            io::write_file_atomic(p, render_heatmap(m, 2));
            note(p);
        }
        auto edges = network_edges(g.members);
        if (!edges.empty()) {
            auto p = out_dir / "edges" / (g.stem() + ".csv");
            io::write_file_atomic(p, render_edges(edges));
            note(p);
        }
    }

    json index = {{"tool_version", kToolVersion}, {"precision", options.precision}, {"files", written}};
    io::write_file_atomic(out_dir / "index.json", index.dump(2) + "\n");
    note(out_dir / "index.json");
    return written;
}

// ---- pipeline ----

namespace {

json strip_tuning(json providers) {
    for (auto& [name, p] : providers.items())
        for (const char* k : {"concurrency", "rate_limit_per_sec", "timeout_seconds"}) p.erase(k);
    return providers;
}

fs::path stage_dir(const RunConfig& c, Stage s) {
    switch (s) {
        case Stage::generate: return c.samples_dir();
        case Stage::analyze: return c.analysis_dir();
        case Stage::score: return c.scores_dir();
        case Stage::outcomes: return c.outcomes_dir();
        case Stage::report: return c.report_dir();
    }
    return c.output_root;
}

std::map<std::string, std::string> base_inputs(const RunConfig& c) {
    std::map<std::string, std::string> d;
    d["corpus"] = path_digest(c.corpus_path);
    d["rules"] = path_digest(c.rules_path);
    d["severity_table"] = path_digest(c.severity_table_path);
    d["overrides"] = c.overrides_path ? path_digest(*c.overrides_path) : "none";
    d["sarif"] = c.sarif_dir ? path_digest(*c.sarif_dir) : "none";
    for (const auto& [name, p] : c.providers)
        if (p.type == "replay") d["fixtures:" + name] = path_digest(p.fixtures);
    return d;
}

std::string stage_input_digest(const RunConfig& c, Stage s, const std::map<std::string, std::string>& inputs) {
    json j;
    const auto& raw = c.raw;
    auto get = [&](const char* key) { return raw.contains(key) ? raw[key] : json(nullptr); };
    switch (s) {
        case Stage::generate: {
            j = {{"models", get("models")}, {"plan", get("plan")}, {"exclusions", get("exclusions")},
                 {"generation", get("generation")}, {"providers", strip_tuning(get("providers"))},
                 {"corpus", inputs.at("corpus")}};
            for (const auto& [k, v] : inputs)
                if (k.starts_with("fixtures:")) j[k] = v;
            break;
        }
        case Stage::analyze:
            j = {{"samples", path_digest(c.samples_dir())}, {"rules", inputs.at("rules")},
                 {"overrides", inputs.at("overrides")}, {"sarif", inputs.at("sarif")},
                 {"cwe_mapping", get("cwe_mapping")}, {"analyzer_command", get("analyzer_command")}};
            break;
        case Stage::score:
            j = {{"analysis", path_digest(c.analysis_dir())}, {"severity_table", inputs.at("severity_table")},
                 {"severity_mode", get("severity_mode")}};
            break;
        case Stage::outcomes:
            j = {{"scores", path_digest(c.scores_dir())},
                 {"per_language", c.report.per_language_associations}};
            break;
        case Stage::report: {
            json formats = json::array();
            for (auto f : c.report.formats) formats.push_back(to_string(f));
            j = {{"scores", path_digest(c.scores_dir())}, {"outcomes", path_digest(c.outcomes_dir())},
                 {"formats", formats}, {"precision", c.report.precision},
                 {"per_language", c.report.per_language_associations}};
            break;
        }
    }
    j["stage"] = to_string(s);
    j["tool_version"] = kToolVersion;
    return io::sha256_hex(j.dump());
}

json run_generate(const RunConfig& c, bool resume, RunManifest& manifest, std::ostream& log) {
    auto corpus = load_corpus(c.corpus_path);
    auto plan = c.plan;
    if (plan.scenario_ids.empty())
        for (const auto& s : corpus.scenarios()) plan.scenario_ids.push_back(s.id);
    auto providers = make_providers(c);
    validate_plan(plan, corpus, c.models, providers);

    SampleStore store(c.samples_dir());
    auto opts = execute_options(c);
    opts.resume = resume;
    fs::create_directories(c.run_dir());
    auto report = execute_plan(plan, corpus, c.models, providers, store, opts);

    for (const auto& [cell, status] : report.cell_status) manifest.cells[cell] = status;
    manifest.sampling = {{"samples_per_cell", plan.samples_per_cell},
                         {"seed", plan.seed},
                         {"sampling", c.sampling},
                         {"scenarios", plan.scenario_ids}};

    json failed = json::array();
    for (const auto& f : report.failed_cells) {
        failed.push_back({{"cell", f.cell.str()}, {"samples", f.sample_indices}, {"reason", f.reason}});
        log << "warning: cell " << f.cell.str() << " failed: " << f.reason << "\n";
    }
    json details = {{"expected_samples", report.expected_samples},
                    {"generated", report.generated},
                    {"reused", report.reused},
                    {"failed_samples", report.failed_samples()},
                    {"failed_cells", failed}};
    io::write_file_atomic(c.run_dir() / "generation.json", details.dump(2) + "\n");
    if (report.expected_samples > 0 && report.generated + report.reused == 0)
        throw StageError("no samples were generated");
    return details;
}

}  // namespace

std::vector<StageOutcome> run_pipeline(const RunConfig& config, const PipelineOptions& options, std::ostream& log) {
    auto check = validate_config(config);
    for (const auto& w : check.warnings) log << "warning: " << w << "\n";
    if (!check.errors.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& e : check.errors) msg += "\n  " + e;
        throw ConfigError(msg);
    }

    auto manifest = RunManifest::load(config.manifest_path());
    auto inputs = base_inputs(config);
    std::vector<std::string> changed;
    for (const auto& [k, v] : inputs) {
        auto it = manifest.input_digests.find(k);
        if (it != manifest.input_digests.end() && it->second != v) changed.push_back(k);
    }
    if (!changed.empty() && !manifest.stages.empty() && !options.force) {
        std::string names;
        for (const auto& k : changed) names += (names.empty() ? "" : ", ") + k;
        throw StageError("inputs changed since the manifest was written (" + names + "); rerun with --force");
    }

    fs::create_directories(config.output_root);
    auto now = utc_timestamp();
    if (manifest.created_at.empty()) manifest.created_at = now;
    manifest.updated_at = now;
    manifest.tool_version = std::string(kToolVersion);
    manifest.config_digest = config.config_path.empty() ? io::sha256_hex(config.raw.dump())
                                                         : io::sha256_hex(io::read_file(config.config_path));
    manifest.input_digests = inputs;
    manifest.save(config.manifest_path());

    std::vector<Stage> stages;
    for (auto s : kAllStages)
        if (std::find(options.stages.begin(), options.stages.end(), s) != options.stages.end()) stages.push_back(s);

    std::vector<StageOutcome> results;
    bool upstream_ran = false;
    for (auto stage : stages) {
        const auto name = std::string(to_string(stage));
        const auto digest = stage_input_digest(config, stage, inputs);
        const auto out_dir = stage_dir(config, stage);
        auto rec = manifest.stages.find(name);
        if (rec != manifest.stages.end()) {
            bool incomplete = stage == Stage::generate && rec->second.details.value("failed_samples", 0L) > 0;
            if (rec->second.input_digest == digest && path_digest(out_dir) == rec->second.output_digest && !incomplete) {
                log << name << ": up to date\n";
                results.push_back({stage, true, "up to date"});
                continue;
            }
            if (rec->second.input_digest != digest && !options.force && !upstream_ran)
                throw StageError(name + ": inputs changed since the stage last completed; rerun with --force");
        }

        log << name << ": running\n";
        json details = json::object();
        std::string summary;
        try {
            switch (stage) {
                case Stage::generate: {
                    details = run_generate(config, options.resume, manifest, log);
                    summary = std::to_string(details["generated"].get<long>()) + " generated, " +
                              std::to_string(details["reused"].get<long>()) + " reused, " +
                              std::to_string(details["failed_samples"].get<long>()) + " failed";
                    break;
                }
                case Stage::analyze: {
                    AnalyzeSettings s;
                    s.rules_path = config.rules_path;
                    if (config.sarif_dir) s.sarif_dirs.push_back(*config.sarif_dir);
                    s.overrides_path = config.overrides_path;
                    s.cwe_mapping = config.cwe_mapping;
                    s.analyzer_command = config.analyzer_command;
                    auto records = run_analyze(config.samples_dir(), s, config.analysis_dir());
                    long findings = 0;
                    for (const auto& r : records) findings += static_cast<long>(r.findings.size());
                    details = {{"records", records.size()}, {"findings", findings}};
                    summary = std::to_string(records.size()) + " records, " + std::to_string(findings) + " findings";
                    break;
                }
                case Stage::score: {
                    auto table = SeverityTable::load(config.severity_table_path);
                    auto out = run_score(config.analysis_dir(), table, config.severity_mode, config.scores_dir());
                    details = {{"cells", out.cells.size()}, {"improvements", out.improvements.size()}};
                    summary = std::to_string(out.cells.size()) + " cells scored";
                    break;
                }
                case Stage::outcomes: {
                    auto out = run_outcomes(config.scores_dir(), config.outcomes_dir(),
                                            config.report.per_language_associations);
                    details = {{"cells", out.size()}};
                    summary = std::to_string(out.size()) + " refined cells categorized";
                    break;
                }
                case Stage::report: {
                    auto files = run_report(config.scores_dir(), config.outcomes_dir(), config.report,
                                            config.report_dir());
                    details = {{"files", files.size()}};
                    summary = std::to_string(files.size()) + " files written";
                    break;
                }
            }
        } catch (const StageError&) {
            manifest.stages.erase(name);
            manifest.save(config.manifest_path());
            throw;
        } catch (const Error& e) {
            manifest.stages.erase(name);
            manifest.save(config.manifest_path());
            throw StageError(name + ": " + e.what());
        }
        upstream_ran = true;
        manifest.stages[name] = {digest, path_digest(out_dir), utc_timestamp(), details};
        manifest.updated_at = manifest.stages[name].completed_at;
        manifest.save(config.manifest_path());
        log << name << ": " << summary << "\n";
        results.push_back({stage, false, summary});
    }
    return results;
}

}  // namespace secrefine
