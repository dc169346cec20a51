#include "secrefine/rules.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <regex>

#include "secrefine/io.hpp"
#include "secrefine/source_view.hpp"

namespace secrefine {

using nlohmann::json;

namespace {

struct Rx {
    std::regex re;
    std::string src;
};

struct Window {
    Rx rx;
    int within = 0;
    bool masked = true;
};

}  // namespace

struct DetectorRule::Compiled {
    // pattern
    std::optional<Rx> pattern;
    bool pattern_masked = true;
    std::optional<Window> near, not_near;
    std::optional<Rx> file_context, file_exclude;
    // credential_literal
    std::vector<Rx> patterns;         // key must sit in code
    std::vector<Rx> string_patterns;  // may match inside string literals (connection strings)
    // tainted_sink
    std::vector<Rx> sources, sinks, sanitizers, guards;
    std::optional<Rx> safe_args, assembly;
    // exception_response
    std::vector<Rx> bindings, responses;
};

namespace {

Rx compile(const std::string& pattern, const std::string& where) {
    auto flags = std::regex::ECMAScript | std::regex::optimize;
    std::string body = pattern;
    if (body.starts_with("(?i)")) {
        body.erase(0, 4);
        flags |= std::regex::icase;
    }
    try {
        return {std::regex(body, flags), pattern};
    } catch (const std::regex_error& e) {
        throw RulePackError(where + ": invalid pattern '" + pattern + "': " + e.what());
    }
}

std::vector<Rx> compile_list(const json& spec, const char* key, const std::string& where, bool required) {
    std::vector<Rx> out;
    if (!spec.contains(key)) {
        if (required) throw RulePackError(where + ": missing '" + key + "'");
        return out;
    }
    const auto& v = spec[key];
    if (v.is_string()) {
        out.push_back(compile(v.get<std::string>(), where));
    } else if (v.is_array()) {
        for (const auto& p : v) out.push_back(compile(p.get<std::string>(), where));
    } else {
        throw RulePackError(where + ": '" + key + "' must be a pattern or list of patterns");
    }
    if (required && out.empty()) throw RulePackError(where + ": '" + key + "' is empty");
    return out;
}

std::optional<Rx> compile_opt(const json& spec, const char* key, const std::string& where) {
    if (!spec.contains(key)) return std::nullopt;
    return compile(spec[key].get<std::string>(), where);
}

bool masked_view(const json& spec, const std::string& where) {
    auto v = spec.value("view", "masked");
    if (v != "masked" && v != "code") throw RulePackError(where + ": view must be 'masked' or 'code'");
    return v == "masked";
}

std::optional<Window> compile_window(const json& spec, const char* key, const std::string& where) {
    if (!spec.contains(key)) return std::nullopt;
    const auto& w = spec[key];
    return Window{compile(w.at("pattern").get<std::string>(), where), w.value("within", 0), masked_view(w, where)};
}

RuleKind parse_kind(const std::string& s, const std::string& where) {
    if (s == "pattern") return RuleKind::pattern;
    if (s == "credential_literal") return RuleKind::credential_literal;
    if (s == "tainted_sink") return RuleKind::tainted_sink;
    if (s == "exception_response") return RuleKind::exception_response;
    throw RulePackError(where + ": unknown rule kind '" + s + "'");
}

std::shared_ptr<const DetectorRule::Compiled> compile_rule(const DetectorRule& r, const std::string& where) {
    auto c = std::make_shared<DetectorRule::Compiled>();
    const auto& s = r.spec;
    c->file_context = compile_opt(s, "file_context", where);
    c->file_exclude = compile_opt(s, "file_exclude", where);
    switch (r.kind) {
        case RuleKind::pattern:
            if (!s.contains("pattern")) throw RulePackError(where + ": missing 'pattern'");
            c->pattern = compile(s["pattern"].get<std::string>(), where);
            c->pattern_masked = masked_view(s, where);
            c->near = compile_window(s, "near", where);
            c->not_near = compile_window(s, "not_near", where);
            break;
        case RuleKind::credential_literal:
            c->patterns = compile_list(s, "patterns", where, false);
            c->string_patterns = compile_list(s, "string_patterns", where, false);
            if (c->patterns.empty() && c->string_patterns.empty())
                throw RulePackError(where + ": needs 'patterns' or 'string_patterns'");
            break;
        case RuleKind::tainted_sink:
            c->sources = compile_list(s, "sources", where, true);
            c->sinks = compile_list(s, "sinks", where, true);
            c->sanitizers = compile_list(s, "sanitizers", where, false);
            c->guards = compile_list(s, "guards", where, false);
            c->safe_args = compile_opt(s, "safe_args", where);
            c->assembly = compile_opt(s, "assembly", where);
            break;
        case RuleKind::exception_response:
            c->bindings = compile_list(s, "bindings", where, true);
            c->responses = compile_list(s, "responses", where, true);
            break;
    }
    return c;
}

bool search(const Rx& rx, std::string_view text) {
    return std::regex_search(text.begin(), text.end(), rx.re);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int indent_of(std::string_view line) {
    int n = 0;
    for (char c : line) {
        if (c == ' ') ++n;
        else if (c == '\t') n += 8;
        else break;
    }
    return n;
}

struct Context {
    const SourceView& view;
    const std::vector<Statement>& statements;
    const std::string& masked_text;
    Language lang;
    const std::string& file;
};

class Emitter {
public:
    Emitter(const DetectorRule& rule, const Context& ctx, std::vector<Finding>& out)
        : rule_(rule), ctx_(ctx), out_(out) {}

    // 0-based inclusive line range.
    void operator()(int first, int last) {
        const int n = static_cast<int>(ctx_.view.line_count());
        if (n == 0) return;
        first = std::clamp(first, 0, n - 1);
        last = std::clamp(last, first, n - 1);
        out_.push_back(Finding{rule_.cwe, ctx_.file, first + 1, last + 1, rule_.rule_id, rule_.description,
                               FindingSource::builtin});
    }

private:
    const DetectorRule& rule_;
    const Context& ctx_;
    std::vector<Finding>& out_;
};

bool file_gate(const DetectorRule::Compiled& c, const Context& ctx) {
    if (c.file_context && !search(*c.file_context, ctx.masked_text)) return false;
    if (c.file_exclude && search(*c.file_exclude, ctx.masked_text)) return false;
    return true;
}

bool window_hit(const Window& w, const Context& ctx, int line) {
    const auto& lines = w.masked ? ctx.view.masked : ctx.view.code;
    const int n = static_cast<int>(lines.size());
    for (int k = std::max(0, line - w.within); k <= std::min(n - 1, line + w.within); ++k)
        if (search(w.rx, lines[k])) return true;
    return false;
}

void run_pattern(const DetectorRule::Compiled& c, const Context& ctx, Emitter& emit) {
    const auto& lines = c.pattern_masked ? ctx.view.masked : ctx.view.code;
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        if (!search(*c.pattern, lines[i])) continue;
        if (c.near && !window_hit(*c.near, ctx, i)) continue;
        if (c.not_near && window_hit(*c.not_near, ctx, i)) continue;
        emit(i, i);
    }
}

// Consecutive credential lines form one finding.
void run_credential(const DetectorRule::Compiled& c, const Context& ctx, Emitter& emit) {
    const int n = static_cast<int>(ctx.view.line_count());
    std::vector<bool> hit(n, false);
    for (int i = 0; i < n; ++i) {
        const auto& code = ctx.view.code[i];
        const auto& masked = ctx.view.masked[i];
        for (const auto& rx : c.patterns) {
            for (std::sregex_iterator it(code.begin(), code.end(), rx.re), end; it != end && !hit[i]; ++it) {
                const auto& m = *it;
                auto pos = static_cast<std::size_t>(m.size() > 1 && m[1].matched ? m.position(1) : m.position(0));
                if (pos < masked.size() && masked[pos] != ' ') hit[i] = true;
            }
        }
        for (const auto& rx : c.string_patterns)
            if (!hit[i] && search(rx, code)) hit[i] = true;
    }
    for (int i = 0; i < n;) {
        if (!hit[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < n && hit[j + 1]) ++j;
        emit(i, j);
        i = j + 1;
    }
}

// Taint tracking ------------------------------------------------------------------------------

const std::set<std::string> kDeclKeywords = {"const", "let", "var", "final", "if", "for", "static", "auto", "val"};

std::string remove_spans(std::string_view s, char open, char close) {
    std::string out;
    int depth = 0;
    for (char c : s) {
        if (c == open) ++depth;
        else if (c == close && depth > 0) --depth;
        else if (depth == 0) out += c;
    }
    return out;
}

bool valid_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; });
}

std::vector<std::string> lhs_names(std::string_view lhs) {
    std::string s(trim(lhs));
    for (bool stripped = true; stripped;) {
        stripped = false;
        auto sp = s.find_first_of(" \t");
        if (sp != std::string::npos && kDeclKeywords.count(s.substr(0, sp))) {
            s = std::string(trim(std::string_view(s).substr(sp)));
            stripped = true;
        }
    }
    s = remove_spans(s, '<', '>');
    const bool destructure = !s.empty() && (s.front() == '{' || s.front() == '[');
    if (destructure) {
        auto close = s.find_last_of("}]");
        s = s.substr(1, close == std::string::npos || close == 0 ? std::string::npos : close - 1);
    } else {
        s = remove_spans(s, '[', ']');
    }

    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string_view part = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (destructure && part.find(':') != std::string_view::npos) part = trim(part.substr(part.find(':') + 1));
        while (!part.empty() && (part.front() == '*' || part.front() == '&' || part.front() == '.')) part.remove_prefix(1);
        if (auto sp = part.find_last_of(" \t"); sp != std::string_view::npos) part = part.substr(sp + 1);
        if (valid_name(part) && part != "_" && part != "err") names.emplace_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return names;
}

struct Assignment {
    std::vector<std::string> names;
    std::string_view rhs;
    bool compound = false;
};

std::optional<Assignment> parse_assignment(std::string_view seg, Language lang) {
    if (lang == Language::python) {
        auto t = trim(seg);
        if (t.starts_with("for ")) {
            auto in = t.find(" in ");
            if (in == std::string_view::npos) return std::nullopt;
            return Assignment{lhs_names(t.substr(4, in - 4)), t.substr(in + 4), false};
        }
    }
    int depth = 0;
    for (std::size_t k = 0; k < seg.size(); ++k) {
        char c = seg[k];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        if (c != '=' || depth != 0) continue;
        char next = k + 1 < seg.size() ? seg[k + 1] : '\0';
        char prev = k > 0 ? seg[k - 1] : '\0';
        if (next == '=' || next == '>') {
            ++k;
            continue;
        }
        if (prev == '=' || prev == '!' || prev == '<' || prev == '>') continue;
        std::string_view lhs = seg.substr(0, k);
        bool compound = false;
        if (!lhs.empty() && std::string_view("+-*/|&%").find(lhs.back()) != std::string_view::npos) {
            compound = true;
            lhs.remove_suffix(1);
        } else if (!lhs.empty() && lhs.back() == ':') {
            lhs.remove_suffix(1);
        }
        auto names = lhs_names(lhs);
        if (names.empty()) return std::nullopt;
        return Assignment{std::move(names), seg.substr(k + 1), compound};
    }
    return std::nullopt;
}

class Taint {
public:
    explicit Taint(const DetectorRule::Compiled& c) : c_(c) {}

    // Blanks sanitizer calls (and postfix sanitizers) so they do not count as tainted uses.
    std::string strip_sanitized(std::string_view text) const {
        std::string out(text);
        for (const auto& rx : c_.sanitizers) {
            std::string snapshot = out;
            for (std::sregex_iterator it(snapshot.begin(), snapshot.end(), rx.re), end; it != end; ++it) {
                auto pos = static_cast<std::size_t>(it->position(0));
                auto len = static_cast<std::size_t>(it->length(0));
                std::size_t stop = pos + len;
                if (len > 0 && snapshot[pos + len - 1] == '(') {
                    auto args = call_arguments(snapshot, pos + len - 1);
                    stop = pos + len + args.size() + 1;
                }
                for (auto k = pos; k < std::min(stop, out.size()); ++k)
                    if (out[k] != '\n') out[k] = ' ';
            }
        }
        return out;
    }

    bool sanitized(std::string_view text) const {
        return std::any_of(c_.sanitizers.begin(), c_.sanitizers.end(), [&](const Rx& rx) { return search(rx, text); });
    }

    bool tainted(std::string_view text) const {
        for (const auto& rx : c_.sources)
            if (search(rx, text)) return true;
        for (const auto& [name, assembled] : vars_)
            if (contains_word(text, name)) return true;
        return false;
    }

    bool references_assembled(std::string_view text) const {
        for (const auto& [name, assembled] : vars_)
            if (assembled && contains_word(text, name)) return true;
        return false;
    }

    bool assembled_use(std::string_view text) const {
        return c_.assembly && search(*c_.assembly, text) && tainted(text);
    }

    void guard(std::string_view seg) {
        if (!std::any_of(c_.guards.begin(), c_.guards.end(), [&](const Rx& rx) { return search(rx, seg); })) return;
        for (auto it = vars_.begin(); it != vars_.end();)
            it = contains_word(seg, it->first) ? vars_.erase(it) : std::next(it);
    }

    void assign(const Assignment& a) {
        const bool clean = sanitized(a.rhs);
        const auto rhs = strip_sanitized(a.rhs);
        const bool t = !clean && tainted(rhs);
        const bool assembled = t && (assembled_use(rhs) || references_assembled(rhs));
        for (const auto& name : a.names) {
            if (t) vars_[name] = vars_[name] || assembled;
            else if (!a.compound || clean) vars_.erase(name);
        }
    }

private:
    const DetectorRule::Compiled& c_;
    std::map<std::string, bool> vars_;  // name -> carries an assembled query
};

std::vector<std::pair<std::size_t, std::string_view>> segments(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        if (k == text.size() || text[k] == ';') {
            out.emplace_back(start, text.substr(start, k - start));
            start = k + 1;
        }
    }
    return out;
}

void run_taint(const DetectorRule::Compiled& c, const Context& ctx, Emitter& emit) {
    Taint taint(c);
    for (const auto& st : ctx.statements) {
        for (auto [offset, seg] : segments(st.masked)) {
            taint.guard(seg);
            const std::string segment(seg);
            // A statement that sanitizes inline (e.g. Paths.get(x).getFileName()) is not a sink use.
            const bool inline_sanitized = taint.sanitized(seg);
            for (const auto& sink : c.sinks) {
                if (inline_sanitized) break;
                for (std::sregex_iterator it(segment.begin(), segment.end(), sink.re), end; it != end; ++it) {
                    auto pos = static_cast<std::size_t>(it->position(0));
                    auto after = pos + static_cast<std::size_t>(it->length(0));
                    auto open = (after > 0 && segment[after - 1] == '(') ? after - 1 : segment.find('(', after);
                    std::string_view args = open == std::string::npos ? std::string_view(segment).substr(after)
                                                                        : call_arguments(segment, open);
                    if (c.safe_args && search(*c.safe_args, args)) continue;
                    const auto cleaned = taint.strip_sanitized(args);
                    bool hit;
                    if (c.assembly) {
                        auto first = first_argument(cleaned);
                        hit = taint.assembled_use(first) || taint.references_assembled(first);
                    } else {
                        hit = taint.tainted(cleaned);
                    }
                    if (hit) {
                        int line = st.line_at(offset + pos);
                        emit(line, line);
                    }
                }
            }
            if (auto a = parse_assignment(seg, ctx.lang)) taint.assign(*a);
        }
    }
}

// Exception text in responses ----------------------------------------------------------------

// Last line of the block opened by the first '{' at or after (line, col); -1 when none.
int brace_scope_end(const SourceView& view, int line, std::size_t col) {
    int depth = 0;
    bool opened = false;
    for (int l = line; l < static_cast<int>(view.masked.size()); ++l) {
        const auto& text = view.masked[l];
        for (std::size_t k = (l == line ? col : 0); k < text.size(); ++k) {
            if (text[k] == '{') {
                ++depth;
                opened = true;
            } else if (text[k] == '}' && opened && --depth == 0) {
                return l;
            }
        }
    }
    return opened ? static_cast<int>(view.masked.size()) - 1 : -1;
}

int indent_scope_end(const SourceView& view, int line) {
    const int base = indent_of(view.masked[line]);
    int end = line;
    for (int l = line + 1; l < static_cast<int>(view.masked.size()); ++l) {
        if (trim(view.masked[l]).empty()) continue;
        if (indent_of(view.masked[l]) <= base) break;
        end = l;
    }
    return end;
}

void run_exception(const DetectorRule::Compiled& c, const Context& ctx, Emitter& emit) {
    const auto& sts = ctx.statements;
    for (std::size_t si = 0; si < sts.size(); ++si) {
        const auto& st = sts[si];
        for (const auto& b : c.bindings) {
            for (std::sregex_iterator it(st.masked.begin(), st.masked.end(), b.re), end; it != end; ++it) {
                if (it->size() < 2 || !(*it)[1].matched) continue;
                const std::string var = (*it)[1].str();
                const auto pos = static_cast<std::size_t>(it->position(0));
                const int bind_line = st.line_at(pos);
                int scope_end;
                if (ctx.lang == Language::python) {
                    scope_end = indent_scope_end(ctx.view, bind_line);
                } else {
                    auto line_start = st.masked.rfind('\n', pos);
                    auto col = line_start == std::string::npos ? pos : pos - line_start - 1;
                    scope_end = brace_scope_end(ctx.view, bind_line, col);
                }
                if (scope_end < 0) continue;
                for (auto tj = si + 1; tj < sts.size() && sts[tj].first <= scope_end; ++tj) {
                    const auto& t = sts[tj];
                    if (!contains_word(t.masked, var)) continue;
                    if (std::any_of(c.responses.begin(), c.responses.end(),
                                    [&](const Rx& rx) { return search(rx, t.masked); }))
                        emit(t.first, t.last);
                }
            }
        }
    }
}

}  // namespace

std::string_view to_string(RuleKind k) {
    switch (k) {
        case RuleKind::pattern: return "pattern";
        case RuleKind::credential_literal: return "credential_literal";
        case RuleKind::tainted_sink: return "tainted_sink";
        case RuleKind::exception_response: return "exception_response";
    }
    return "pattern";
}

RulePack RulePack::parse(const json& doc, const std::string& origin) {
    RulePack pack;
    if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_array())
        throw RulePackError(origin + ": expected an object with a 'rules' array");
    pack.name_ = doc.value("name", "rules");
    pack.version_ = doc.value("version", "0");
    std::set<std::string> ids;
    for (std::size_t n = 0; n < doc["rules"].size(); ++n) {
        const auto& j = doc["rules"][n];
        DetectorRule r;
        r.rule_id = j.value("rule_id", "");
        const std::string where = origin + ": rule '" + (r.rule_id.empty() ? "#" + std::to_string(n) : r.rule_id) + "'";
        if (r.rule_id.empty()) throw RulePackError(where + ": missing rule_id");
        if (!ids.insert(r.rule_id).second) throw RulePackError(where + ": duplicate rule_id");
        try {
            r.cwe = CweId::parse(j.at("cwe").get<std::string>());
            for (const auto& l : j.at("languages")) r.languages.insert(parse_language(l.get<std::string>()));
        } catch (const json::exception& e) {
            throw RulePackError(where + ": " + e.what());
        } catch (const Error& e) {
            throw RulePackError(where + ": " + e.what());
        }
        if (r.languages.empty()) throw RulePackError(where + ": languages must be non-empty");
        r.description = j.value("description", "");
        r.kind = parse_kind(j.value("kind", "pattern"), where);
        r.spec = j;
        r.compiled = compile_rule(r, where);
        pack.rules_.push_back(std::move(r));
    }
    return pack;
}

RulePack RulePack::load(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(io::read_file(path));
    } catch (const json::exception& e) {
        throw RulePackError(path.string() + ": " + e.what());
    }
    return parse(doc, path.string());
}

std::vector<const DetectorRule*> RulePack::for_language(Language lang) const {
    std::vector<const DetectorRule*> out;
    for (const auto& r : rules_)
        if (r.languages.count(lang)) out.push_back(&r);
    return out;
}

ScanResult scan_builtin(const RulePack& pack, std::string_view code, Language lang, const std::string& file) {
    ScanResult result;
    const auto rules = pack.for_language(lang);
    if (rules.empty()) {
        result.warnings.push_back("no builtin rules for language " + std::string(to_string(lang)));
        return result;
    }
    const auto view = make_source_view(code, lang);
    const auto statements = split_statements(view, lang);
    std::string masked_text;
    for (const auto& l : view.masked) masked_text += l + "\n";
    const Context ctx{view, statements, masked_text, lang, file};

    for (const auto* rule : rules) {
        const auto& c = *rule->compiled;
        if (!file_gate(c, ctx)) continue;
        Emitter emit(*rule, ctx, result.findings);
        switch (rule->kind) {
            case RuleKind::pattern: run_pattern(c, ctx, emit); break;
            case RuleKind::credential_literal: run_credential(c, ctx, emit); break;
            case RuleKind::tainted_sink: run_taint(c, ctx, emit); break;
            case RuleKind::exception_response: run_exception(c, ctx, emit); break;
        }
    }
    dedup_findings(result.findings);
    return result;
}

}  // namespace secrefine
