#include "secrefine/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <json.hpp>

#include "secrefine/io.hpp"

namespace secrefine {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifestName = "manifest.json";

std::string default_framework(Language lang) {
    switch (lang) {
        case Language::python: return "flask";
        case Language::javascript: return "express";
        case Language::java: return "servlet";
        case Language::go: return "net/http";
    }
    return {};
}

ScenarioVariant split_at_marker(int scenario_id, Language lang, const std::string& text) {
    ScenarioVariant v;
    v.scenario_id = scenario_id;
    v.language = lang;
    auto token_pos = text.find(kMarkerToken);
    if (token_pos == std::string::npos) {
        v.source_prefix = text;
        return v;
    }
    auto start = token_pos;
    auto comment = line_comment(lang);
    auto probe = start;
    while (probe > 0 && (text[probe - 1] == ' ' || text[probe - 1] == '\t')) --probe;
    if (probe >= comment.size() && text.compare(probe - comment.size(), comment.size(), comment) == 0)
        start = probe - comment.size();
    auto end = token_pos + kMarkerToken.size();
    v.source_prefix = text.substr(0, start);
    v.marker = text.substr(start, end - start);
    v.source_suffix = text.substr(end);
    return v;
}

std::string trim_copy(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

}  // namespace

std::string marker_for(Language lang) { return std::string(line_comment(lang)) + std::string(kMarkerToken); }

std::string Violation::str() const {
    std::string out = "scenario " + std::to_string(scenario_id);
    if (language) out += " [" + std::string(to_string(*language)) + "]";
    return out + ": " + rule;
}

Corpus::Corpus(std::vector<Language> languages, std::vector<Scenario> scenarios,
               std::vector<ScenarioVariant> variants)
    : languages_(std::move(languages)), scenarios_(std::move(scenarios)), variants_(std::move(variants)) {
    std::stable_sort(scenarios_.begin(), scenarios_.end(),
                     [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
    std::stable_sort(variants_.begin(), variants_.end(), [](const ScenarioVariant& a, const ScenarioVariant& b) {
        return std::tie(a.scenario_id, a.language) < std::tie(b.scenario_id, b.language);
    });
}

const Scenario* Corpus::find_scenario(int id) const {
    for (const auto& s : scenarios_)
        if (s.id == id) return &s;
    return nullptr;
}

const ScenarioVariant* Corpus::find_variant(int scenario_id, Language lang) const {
    for (const auto& v : variants_)
        if (v.scenario_id == scenario_id && v.language == lang) return &v;
    return nullptr;
}

std::string Corpus::variant_file_name(int scenario_id, Language lang) {
    return std::string(to_string(lang)) + "/scenario_" + std::to_string(scenario_id) + "." +
           std::string(file_extension(lang));
}

int marker_count(std::string_view text) {
    int count = 0;
    for (auto pos = text.find(kMarkerToken); pos != std::string_view::npos;
         pos = text.find(kMarkerToken, pos + kMarkerToken.size()))
        ++count;
    return count;
}

Corpus load_corpus_unchecked(const fs::path& root) {
    const auto manifest_path = root / kManifestName;
    json manifest;
    try {
        manifest = json::parse(io::read_file(manifest_path));
    } catch (const std::exception& e) {
        throw CorpusError(manifest_path.string() + ": unreadable manifest (" + e.what() + ")");
    }

    std::vector<Language> languages;
    std::vector<Scenario> scenarios;
    std::map<Language, std::string> frameworks;
    try {
        for (const auto& l : manifest.at("languages")) languages.push_back(parse_language(l.get<std::string>()));
        if (manifest.contains("frameworks"))
            for (const auto& [k, v] : manifest["frameworks"].items()) frameworks[parse_language(k)] = v.get<std::string>();
        for (const auto& s : manifest.at("scenarios")) {
            Scenario sc;
            sc.id = s.at("id").get<int>();
            sc.name = s.at("name").get<std::string>();
            sc.target_cwe = CweId::parse(s.at("cwe").get<std::string>());
            sc.description = s.value("description", "");
            sc.instruction = s.value("instruction", "");
            scenarios.push_back(std::move(sc));
        }
    } catch (const std::exception& e) {
        throw CorpusError(manifest_path.string() + ": unreadable manifest (" + e.what() + ")");
    }

    std::vector<ScenarioVariant> variants;
    for (const auto& sc : scenarios) {
        for (auto lang : languages) {
            const auto file = root / Corpus::variant_file_name(sc.id, lang);
            if (!fs::exists(file)) continue;
            auto v = split_at_marker(sc.id, lang, io::read_file(file));
            auto fw = frameworks.find(lang);
            v.framework_tag = fw != frameworks.end() ? fw->second : default_framework(lang);
            variants.push_back(std::move(v));
        }
    }
    return Corpus(std::move(languages), std::move(scenarios), std::move(variants));
}

std::vector<Violation> validate_corpus(const Corpus& corpus) {
    std::vector<Violation> out;
    const auto& scenarios = corpus.scenarios();
    if (scenarios.empty()) out.push_back({0, std::nullopt, "no scenarios"});

    std::map<int, int> seen;
    for (const auto& s : scenarios) ++seen[s.id];
    for (const auto& [id, n] : seen)
        if (n > 1) out.push_back({id, std::nullopt, "duplicate scenario id"});
    int expected = 1;
    for (const auto& [id, n] : seen) {
        if (id != expected) {
            out.push_back({id, std::nullopt, "non-contiguous ids"});
            break;
        }
        ++expected;
    }

    for (const auto& [id, n] : seen)
        for (auto lang : corpus.languages())
            if (!corpus.find_variant(id, lang)) out.push_back({id, lang, "missing variant"});

    for (const auto& v : corpus.variants()) {
        if (!seen.count(v.scenario_id)) out.push_back({v.scenario_id, v.language, "variant without scenario"});
        if (v.source_prefix.empty()) out.push_back({v.scenario_id, v.language, "empty source prefix"});
        if (!v.marker.empty() && v.marker.find(kMarkerToken) == std::string::npos)
            out.push_back({v.scenario_id, v.language, "marker lacks token"});
        const int n = marker_count(render_context(v));
        if (n == 0)
            out.push_back({v.scenario_id, v.language, "marker absent"});
        else if (n > 1)
            out.push_back({v.scenario_id, v.language, "marker count = " + std::to_string(n)});
    }
    return out;
}

Corpus load_corpus(const fs::path& root) {
    auto corpus = load_corpus_unchecked(root);
    auto violations = validate_corpus(corpus);
    if (violations.empty()) return corpus;
    const auto& v = violations.front();
    if (v.language) {
        auto file = (root / Corpus::variant_file_name(v.scenario_id, *v.language)).string();
        auto reason = v.rule == "missing variant" ? std::string("missing variant file") : v.rule;
        throw CorpusError(file + ": " + reason);
    }
    throw CorpusError((root / kManifestName).string() + ": " + v.str());
}

std::string render_context(const ScenarioVariant& variant) {
    return variant.source_prefix + variant.marker + variant.source_suffix;
}

void write_corpus(const Corpus& corpus, const fs::path& root) {
    json manifest;
    manifest["languages"] = json::array();
    for (auto l : corpus.languages()) manifest["languages"].push_back(std::string(to_string(l)));
    json frameworks = json::object();
    for (const auto& v : corpus.variants()) frameworks[std::string(to_string(v.language))] = v.framework_tag;
    manifest["frameworks"] = frameworks;
    manifest["scenarios"] = json::array();
    for (const auto& s : corpus.scenarios()) {
        json j{{"id", s.id}, {"name", s.name}, {"cwe", s.target_cwe.str()}, {"description", s.description}};
        if (!s.instruction.empty()) j["instruction"] = s.instruction;
        manifest["scenarios"].push_back(std::move(j));
    }
    io::write_file_atomic(root / kManifestName, manifest.dump(2) + "\n");
    for (const auto& v : corpus.variants())
        io::write_file_atomic(root / Corpus::variant_file_name(v.scenario_id, v.language), render_context(v));
}

std::string scenario_instruction(const Scenario& scenario, const ScenarioVariant& variant) {
    if (!scenario.instruction.empty()) return scenario.instruction;
    auto lines = io::split_lines(variant.source_prefix);
    const auto comment = std::string(line_comment(variant.language));
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        auto line = trim_copy(*it);
        std::string text;
        if (line.size() >= 6 && line.starts_with("\"\"\"") && line.ends_with("\"\"\""))
            text = line.substr(3, line.size() - 6);
        else if (line.starts_with(comment) && line.find(kMarkerToken) == std::string::npos)
            text = line.substr(comment.size());
        text = trim_copy(text);
        if (text.empty()) continue;
        text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        if (text.back() != '.') text += '.';
        return text;
    }
    return "Complete the " + std::string(to_string(variant.language)) + " code for: " + scenario.name + ".";
}

}  // namespace secrefine
