#include "secrefine/extract.hpp"

#include <algorithm>
#include <cctype>

#include "secrefine/io.hpp"

namespace secrefine {

namespace {

std::string_view ltrim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    return s;
}

std::string_view trim(std::string_view s) {
    s = ltrim(s);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool tag_matches(std::string_view tag, Language lang) {
    switch (lang) {
        case Language::python: return tag == "python" || tag == "py" || tag == "python3";
        case Language::javascript:
            return tag == "javascript" || tag == "js" || tag == "node" || tag == "nodejs" || tag == "jsx";
        case Language::java: return tag == "java";
        case Language::go: return tag == "go" || tag == "golang";
    }
    return false;
}

bool code_like(std::string_view text) {
    if (text.find_first_of("(){}=;[]") != std::string_view::npos) return true;
    for (std::string_view kw : {"def ", "function ", "func ", "class ", "import ", "return "})
        if (text.find(kw) != std::string_view::npos) return true;
    return false;
}

// First line of the snippet that is neither blank nor a comment; used to recognise full files.
std::string anchor_line(const ScenarioVariant& variant) {
    const auto comment = line_comment(variant.language);
    for (const auto& line : io::split_lines(variant.source_prefix)) {
        auto t = trim(line);
        if (t.empty() || t.starts_with(comment)) continue;
        return std::string(t);
    }
    return {};
}

bool is_full_file(std::string_view code, const ScenarioVariant& variant) {
    auto anchor = anchor_line(variant);
    if (anchor.empty()) return false;
    for (const auto& line : io::split_lines(code))
        if (trim(line) == anchor) return true;
    return false;
}

std::string strip_blank_edges(std::string_view text) {
    auto lines = io::split_lines(text);
    std::size_t first = 0, last = lines.size();
    while (first < last && trim(lines[first]).empty()) ++first;
    while (last > first && trim(lines[last - 1]).empty()) --last;
    std::string out;
    for (auto i = first; i < last; ++i) out += lines[i] + "\n";
    return out;
}

std::string finish(std::string_view code, const ScenarioVariant& variant) {
    auto body = strip_blank_edges(code);
    if (trim(body).empty() || !code_like(body)) throw ExtractionError("no code found");
    if (is_full_file(body, variant)) return body;
    return splice_completion(variant, body);
}

}  // namespace

std::vector<FencedBlock> fenced_blocks(std::string_view text) {
    std::vector<FencedBlock> blocks;
    auto lines = io::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = ltrim(lines[i]);
        if (!(t.starts_with("```") || t.starts_with("~~~"))) continue;
        const char fc = t.front();
        std::size_t n = 0;
        while (n < t.size() && t[n] == fc) ++n;
        FencedBlock block;
        auto info = trim(t.substr(n));
        info = info.substr(0, info.find_first_of(" \t{"));
        block.info.assign(info.begin(), info.end());
        std::transform(block.info.begin(), block.info.end(), block.info.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        std::size_t j = i + 1;
        for (; j < lines.size(); ++j) {
            auto close = trim(lines[j]);
            if (close.size() >= n && std::all_of(close.begin(), close.end(), [&](char c) { return c == fc; }))
                break;
            block.body += lines[j] + "\n";
        }
        blocks.push_back(std::move(block));
        i = j;
    }
    return blocks;
}

std::string splice_completion(const ScenarioVariant& variant, std::string_view completion) {
    std::string head = variant.source_prefix + variant.marker;
    std::string_view rest = variant.source_suffix;
    auto nl = rest.find('\n');
    if (nl == std::string_view::npos) {
        head += rest;
        rest = {};
    } else {
        head += rest.substr(0, nl);
        rest.remove_prefix(nl + 1);
    }
    std::string body(completion);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    return head + "\n" + body + "\n" + std::string(rest);
}

std::string extract_code(std::string_view raw_response, const ScenarioVariant& variant) {
    if (trim(raw_response).empty()) throw ExtractionError("no code found");
    auto blocks = fenced_blocks(raw_response);
    if (blocks.empty()) return finish(raw_response, variant);

    auto pick = [&](auto pred) -> const FencedBlock* {
        const FencedBlock* best = nullptr;
        for (const auto& b : blocks)
            if (pred(b) && !trim(b.body).empty() && (!best || b.body.size() > best->body.size())) best = &b;
        return best;
    };
    const FencedBlock* chosen = pick([&](const FencedBlock& b) { return tag_matches(b.info, variant.language); });
    if (!chosen) chosen = pick([](const FencedBlock& b) { return b.info.empty(); });
    if (!chosen) chosen = pick([](const FencedBlock&) { return true; });
    if (!chosen) throw ExtractionError("no code found");
    return finish(chosen->body, variant);
}

}  // namespace secrefine
