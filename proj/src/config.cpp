#include "secrefine/config.hpp"

#include <algorithm>
#include <set>

#include "secrefine/corpus.hpp"
#include "secrefine/io.hpp"
#include "secrefine/overrides.hpp"
#include "secrefine/rules.hpp"

namespace secrefine {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(Format f) {
    switch (f) {
        case Format::csv: return "csv";
        case Format::json: return "json";
        case Format::markdown: return "markdown";
    }
    return "csv";
}

Format parse_format(std::string_view text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    if (text == "markdown" || text == "md") return Format::markdown;
    throw ConfigError("unsupported format '" + std::string(text) + "'");
}

const ModelSpec* RunConfig::find_model(const std::string& id) const {
    for (const auto& m : models)
        if (m.id == id) return &m;
    return nullptr;
}

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path.lexically_normal() : (base / path).lexically_normal();
}

std::map<std::string, std::string> string_map(const json& j) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.items()) out[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return out;
}

}  // namespace

RunConfig parse_config(const json& doc, const fs::path& base) {
    RunConfig c;
    c.raw = doc;
    try {
        c.corpus_path = resolve(base, doc.at("corpus").get<std::string>());
        c.rules_path = resolve(base, doc.at("rules").get<std::string>());
        c.severity_table_path = resolve(base, doc.at("severity_table").get<std::string>());
        if (doc.contains("overrides") && !doc["overrides"].is_null())
            c.overrides_path = resolve(base, doc["overrides"].get<std::string>());
        if (doc.contains("sarif_dir") && !doc["sarif_dir"].is_null())
            c.sarif_dir = resolve(base, doc["sarif_dir"].get<std::string>());
        if (doc.contains("analyzer_command") && !doc["analyzer_command"].is_null())
            c.analyzer_command = doc["analyzer_command"].get<std::string>();
        c.output_root = resolve(base, doc.at("output_root").get<std::string>());

        for (const auto& [name, p] : doc.at("providers").items()) {
            ProviderConfig pc;
            pc.name = name;
            pc.type = p.at("type").get<std::string>();
            if (p.contains("api_key"))
                throw ConfigError("provider '" + name + "': credentials must come from api_key_env, not the config");
            if (pc.type == "replay") {
                pc.fixtures = resolve(base, p.at("fixtures").get<std::string>());
            } else if (pc.type == "http") {
                pc.http.base_url = p.at("base_url").get<std::string>();
                pc.http.path = p.value("path", pc.http.path);
                pc.http.api_key_env = p.value("api_key_env", "");
                pc.http.timeout_seconds = p.value("timeout_seconds", pc.http.timeout_seconds);
            } else {
                throw ConfigError("provider '" + name + "': unknown type '" + pc.type + "'");
            }
            pc.settings.concurrency = p.value("concurrency", 1);
            pc.settings.rate_limit_per_sec = p.value("rate_limit_per_sec", 0.0);
            c.providers[name] = pc;
        }

        for (const auto& m : doc.at("models")) {
            ModelSpec s;
            s.id = m.at("id").get<std::string>();
            s.provider = m.at("provider").get<std::string>();
            s.model_name = m.value("model_name", s.id);
            auto kind = m.value("kind", "general");
            if (kind == "reasoning") s.kind = ModelKind::reasoning;
            else if (kind != "general") throw ConfigError("model '" + s.id + "': unknown kind '" + kind + "'");
            if (m.contains("fine_tuned_of") && !m["fine_tuned_of"].is_null())
                s.fine_tuned_of = m["fine_tuned_of"].get<std::string>();
            s.locally_hosted = m.value("locally_hosted", false);
            s.endpoint = m.value("endpoint", json::object());
            c.models.push_back(std::move(s));
        }

        const auto& plan = doc.at("plan");
        c.plan.models = plan.at("models").get<std::vector<std::string>>();
        for (const auto& t : plan.at("techniques")) c.plan.techniques.push_back(parse_technique(t.get<std::string>()));
        if (plan.contains("languages"))
            for (const auto& l : plan["languages"]) c.plan.languages.push_back(parse_language(l.get<std::string>()));
        else
            c.plan.languages.assign(std::begin(kAllLanguages), std::end(kAllLanguages));
        if (plan.contains("scenarios") && plan["scenarios"].is_array())
            c.plan.scenario_ids = plan["scenarios"].get<std::vector<int>>();
        c.plan.samples_per_cell = plan.value("samples_per_cell", 10);
        c.plan.seed = plan.value("seed", std::uint64_t{0});
        auto nep = plan.value("nep_examples", "first");
        if (nep == "all") c.plan.nep_examples = NepExamples::all;
        else if (nep != "first") throw ConfigError("nep_examples must be 'first' or 'all'");

        for (const auto& e : doc.value("exclusions", json::array()))
            c.exclusions.insert({e.at("model").get<std::string>(), parse_technique(e.at("technique").get<std::string>())});

        const auto& gen = doc.value("generation", json::object());
        c.system_prompt = gen.value("system_prompt", "");
        c.sampling = string_map(gen.value("sampling", json::object()));
        c.max_attempts = gen.value("max_attempts", 3);
        c.backoff_ms = gen.value("backoff_ms", 250);

        const auto mapping = doc.value("cwe_mapping", json::object());
        for (const auto& [rule, cwe] : mapping.items())
            c.cwe_mapping[rule] = CweId::parse(cwe.get<std::string>());
        auto mode = doc.value("severity_mode", "multiset");
        if (mode == "set") c.severity_mode = SeverityMode::set;
        else if (mode != "multiset") throw ConfigError("severity_mode must be 'multiset' or 'set'");

        const auto& rep = doc.value("report", json::object());
        if (rep.contains("formats")) {
            c.report.formats.clear();
            for (const auto& f : rep["formats"]) c.report.formats.push_back(parse_format(f.get<std::string>()));
        }
        c.report.precision = rep.value("precision", 2);
        c.report.per_language_associations = rep.value("per_language_associations", false);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return c;
}

RunConfig load_config(const fs::path& path) {
    json doc;
    try {
        doc = json::parse(io::read_file(path));
    } catch (const std::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    auto c = parse_config(doc, fs::absolute(path).parent_path());
    c.config_path = fs::absolute(path).lexically_normal();
    return c;
}

ConfigReport validate_config(const RunConfig& c) {
    ConfigReport r;
    auto err = [&](std::string s) { r.errors.push_back(std::move(s)); };

    std::optional<Corpus> corpus;
    try {
        corpus = load_corpus_unchecked(c.corpus_path);
        for (const auto& v : validate_corpus(*corpus)) err("corpus: " + v.str());
    } catch (const Error& e) {
        err(std::string("corpus: ") + e.what());
    }
    std::optional<RulePack> rules;
    try {
        rules = RulePack::load(c.rules_path);
    } catch (const Error& e) {
        err(e.what());
    }
    std::optional<SeverityTable> table;
    try {
        table = SeverityTable::load(c.severity_table_path);
    } catch (const Error& e) {
        err(e.what());
    }
    if (c.overrides_path) {
        try {
            OverrideLedger::load(*c.overrides_path);
        } catch (const Error& e) {
            err(e.what());
        }
    }
    if (c.sarif_dir && !fs::is_directory(*c.sarif_dir)) err("sarif_dir does not exist: " + c.sarif_dir->string());

    std::set<std::string> ids;
    for (const auto& m : c.models) {
        if (!ids.insert(m.id).second) err("duplicate model id '" + m.id + "'");
        if (!c.providers.count(m.provider)) err("model '" + m.id + "' references unknown provider '" + m.provider + "'");
    }
    for (const auto& m : c.models)
        if (m.fine_tuned_of && !ids.count(*m.fine_tuned_of))
            err("model '" + m.id + "' is fine-tuned from unknown model '" + *m.fine_tuned_of + "'");
    for (const auto& id : c.plan.models)
        if (!ids.count(id)) err("plan references unknown model id '" + id + "'");
    const bool has_ft = std::count(c.plan.techniques.begin(), c.plan.techniques.end(), Technique::ft) > 0;
    if (has_ft)
        for (const auto& id : c.plan.models)
            if (ids.count(id) && !c.exclusions.count({id, Technique::ft}) && !fine_tuned_for(c.models, id))
                err("plan uses ft but model '" + id + "' has no fine-tuned spec (declare an exclusion)");
    for (const auto& [id, t] : c.exclusions)
        if (!ids.count(id)) err("exclusion references unknown model id '" + id + "'");
    if (c.plan.samples_per_cell < 1) err("samples_per_cell must be >= 1");
    for (const auto& [name, p] : c.providers)
        if (p.type == "replay" && !fs::is_directory(p.fixtures))
            err("provider '" + name + "': fixtures directory does not exist: " + p.fixtures.string());
    if (corpus) {
        for (int sid : c.plan.scenario_ids)
            if (!corpus->find_scenario(sid)) err("plan references unknown scenario id " + std::to_string(sid));
    }

    if (table) {
        CweSet used;
        if (rules)
            for (const auto& rule : rules->rules()) used.insert(rule.cwe);
        for (const auto& [rule, cwe] : c.cwe_mapping) used.insert(cwe);
        if (corpus)
            for (const auto& s : corpus->scenarios()) used.insert(s.target_cwe);
        if (c.sarif_dir && fs::is_directory(*c.sarif_dir))
            for (const auto& rel : io::list_files(*c.sarif_dir)) {
                if (!rel.ends_with(".sarif")) continue;
                try {
                    for (const auto& f : ingest_sarif(io::read_file(*c.sarif_dir / rel), c.cwe_mapping).findings)
                        used.insert(f.cwe);
                } catch (const Error& e) {
                    err(rel + ": " + e.what());
                }
            }
        CweSet missing;
        for (auto cwe : used)
            if (!table->contains(cwe)) missing.insert(cwe);
        if (!missing.empty()) r.warnings.push_back("severity table lacks " + to_string(missing));
    }
    return r;
}

std::map<std::string, ProviderHandle> make_providers(const RunConfig& c) {
    std::map<std::string, std::shared_ptr<Provider>> instances;
    std::map<std::string, ProviderHandle> out;
    for (const auto& m : c.models) {
        auto pit = c.providers.find(m.provider);
        if (pit == c.providers.end()) throw ConfigError("model '" + m.id + "' references unknown provider '" + m.provider + "'");
        auto& inst = instances[m.provider];
        if (!inst) {
            if (pit->second.type == "replay") inst = std::make_shared<ReplayProvider>(pit->second.fixtures);
            else inst = std::make_shared<HttpProvider>(pit->second.http);
        }
        out[m.id] = {inst, pit->second.settings};
    }
    return out;
}

ExecuteOptions execute_options(const RunConfig& c) {
    ExecuteOptions o;
    o.max_attempts = c.max_attempts;
    o.backoff_base = std::chrono::milliseconds(c.backoff_ms);
    o.system_prompt = c.system_prompt;
    o.sampling = c.sampling;
    o.exclusions = c.exclusions;
    o.timings_path = c.run_dir() / "timings.jsonl";
    return o;
}

}  // namespace secrefine
