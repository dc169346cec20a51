#include "secrefine/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace secrefine {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

}  // namespace

CweId::CweId(std::uint32_t number) : number_(number) {
    if (number == 0) throw Error("CWE number must be positive");
}

std::optional<CweId> CweId::try_parse(std::string_view text) {
    text = trim(text);
    if (text.size() > 4) {
        auto head = lower(text.substr(0, 4));
        if (head == "cwe-") text.remove_prefix(4);
    }
    if (text.empty()) return std::nullopt;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return std::nullopt;
    return CweId(value);
}

CweId CweId::parse(std::string_view text) {
    if (auto id = try_parse(text)) return *id;
    throw Error("invalid CWE identifier: '" + std::string(text) + "'");
}

std::string to_string(const CweSet& set) {
    std::string out = "{";
    for (auto it = set.begin(); it != set.end(); ++it) {
        if (it != set.begin()) out += ",";
        out += std::to_string(it->number());
    }
    return out + "}";
}

std::string_view to_string(Language lang) {
    switch (lang) {
        case Language::python: return "python";
        case Language::javascript: return "javascript";
        case Language::java: return "java";
        case Language::go: return "go";
    }
    return "?";
}

Language parse_language(std::string_view text) {
    auto s = lower(trim(text));
    if (s == "python" || s == "py") return Language::python;
    if (s == "javascript" || s == "js") return Language::javascript;
    if (s == "java") return Language::java;
    if (s == "go" || s == "golang") return Language::go;
    throw Error("unknown language: '" + std::string(text) + "'");
}

std::string_view file_extension(Language lang) {
    switch (lang) {
        case Language::python: return "py";
        case Language::javascript: return "js";
        case Language::java: return "java";
        case Language::go: return "go";
    }
    return "txt";
}

std::string_view line_comment(Language lang) { return lang == Language::python ? "#" : "//"; }

std::string_view to_string(Technique t) {
    switch (t) {
        case Technique::raw: return "raw";
        case Technique::nep: return "nep";
        case Technique::cot: return "cot";
        case Technique::mp: return "mp";
        case Technique::ft: return "ft";
    }
    return "?";
}

std::string_view display_name(Technique t) {
    switch (t) {
        case Technique::raw: return "Raw";
        case Technique::nep: return "NEP";
        case Technique::cot: return "CoT";
        case Technique::mp: return "MP";
        case Technique::ft: return "FT";
    }
    return "?";
}

Technique parse_technique(std::string_view text) {
    auto s = lower(trim(text));
    for (auto t : kAllTechniques)
        if (s == to_string(t)) return t;
    throw Error("unknown technique: '" + std::string(text) + "'");
}

std::string CellKey::str() const {
    return model_id + "/" + std::string(to_string(technique)) + "/" + std::string(to_string(language)) +
           "/scenario_" + std::to_string(scenario_id);
}

std::string SampleKey::cell_path() const { return CellKey::of(*this).str(); }

std::string SampleKey::str() const { return cell_path() + "/sample_" + std::to_string(sample_index); }

SampleKey SampleKey::parse(std::string_view text) {
    const std::string original(text);
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = text.find('/');
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    auto bad = [&] { return Error("malformed sample key: '" + original + "'"); };
    if (parts.size() != 5) throw bad();
    auto number_after = [&](std::string_view part, std::string_view prefix) {
        if (part.substr(0, prefix.size()) != prefix) throw bad();
        part.remove_prefix(prefix.size());
        int value = -1;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || value < 0) throw bad();
        return value;
    };
    SampleKey key;
    key.model_id = std::string(parts[0]);
    key.technique = parse_technique(parts[1]);
    key.language = parse_language(parts[2]);
    key.scenario_id = number_after(parts[3], "scenario_");
    key.sample_index = number_after(parts[4], "sample_");
    if (key.model_id.empty()) throw bad();
    return key;
}

}  // namespace secrefine
