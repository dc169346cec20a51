#include "secrefine/source_view.hpp"

#include <algorithm>
#include <cctype>

namespace secrefine {

namespace {

bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<std::string> to_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            lines.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    return lines;
}

class Masker {
public:
    Masker(std::string_view text, Language lang) : in_(text), lang_(lang), code_(text), masked_(text) {}

    SourceView run() {
        while (i_ < in_.size()) {
            char c = in_[i_];
            if (lang_ == Language::python && c == '#') {
                comment_to_eol();
            } else if (lang_ != Language::python && c == '/' && peek(1) == '/') {
                comment_to_eol();
            } else if (lang_ != Language::python && c == '/' && peek(1) == '*') {
                block_comment();
            } else if (c == '"' || c == '\'' || (c == '`' && lang_ != Language::python && lang_ != Language::java)) {
                string_literal();
            } else {
                ++i_;
            }
        }
        return {to_lines(code_), to_lines(masked_)};
    }

private:
    char peek(std::size_t k) const { return i_ + k < in_.size() ? in_[i_ + k] : '\0'; }

    void blank(std::string& s, std::size_t pos) {
        if (s[pos] != '\n' && s[pos] != '\r') s[pos] = ' ';
    }

    void comment_to_eol() {
        while (i_ < in_.size() && in_[i_] != '\n') {
            blank(code_, i_);
            blank(masked_, i_);
            ++i_;
        }
    }

    void block_comment() {
        std::size_t end = in_.find("*/", i_ + 2);
        end = end == std::string_view::npos ? in_.size() : end + 2;
        for (; i_ < end; ++i_) {
            blank(code_, i_);
            blank(masked_, i_);
        }
    }

    bool python_fstring_prefix() const {
        std::size_t k = i_;
        bool f = false;
        while (k > 0 && std::isalpha(static_cast<unsigned char>(in_[k - 1])) && i_ - k < 2) {
            --k;
            if (in_[k] == 'f' || in_[k] == 'F') f = true;
        }
        if (k > 0 && is_word(in_[k - 1])) return false;
        return f;
    }

    void string_literal() {
        const char q = in_[i_];
        const bool triple = (lang_ == Language::python || lang_ == Language::java) && peek(1) == q && peek(2) == q;
        const bool interpolating = (lang_ == Language::python && python_fstring_prefix()) ||
                                   (lang_ == Language::javascript && q == '`');
        const bool raw = lang_ == Language::go && q == '`';
        const bool multiline = triple || q == '`';
        i_ += triple ? 3 : 1;
        while (i_ < in_.size()) {
            char c = in_[i_];
            if (c == '\n' && !multiline) return;  // unterminated; recover at end of line
            if (c == '\\' && !raw) {
                blank(masked_, i_);
                if (i_ + 1 < in_.size()) blank(masked_, i_ + 1);
                i_ += 2;
                continue;
            }
            if (c == q && (!triple || (peek(1) == q && peek(2) == q))) {
                i_ += triple ? 3 : 1;
                return;
            }
            if (interpolating && lang_ == Language::python && c == '{') {
                if (peek(1) == '{') {
                    blank(masked_, i_);
                    blank(masked_, i_ + 1);
                    i_ += 2;
                    continue;
                }
                skip_interpolation(i_);
                continue;
            }
            if (interpolating && lang_ == Language::javascript && c == '$' && peek(1) == '{') {
                skip_interpolation(i_ + 1);
                continue;
            }
            blank(masked_, i_);
            ++i_;
        }
    }

    // Leaves the expression inside {...} visible; `open` indexes the '{'.
    void skip_interpolation(std::size_t open) {
        int depth = 0;
        i_ = open;
        while (i_ < in_.size()) {
            char c = in_[i_++];
            if (c == '{') ++depth;
            else if (c == '}' && --depth == 0) return;
            else if (c == '\n' && lang_ == Language::python) return;
        }
    }

    std::string_view in_;
    Language lang_;
    std::string code_;
    std::string masked_;
    std::size_t i_ = 0;
};

std::string_view rtrim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

SourceView make_source_view(std::string_view text, Language lang) { return Masker(text, lang).run(); }

int Statement::line_at(std::size_t offset) const {
    offset = std::min(offset, masked.size());
    return first + static_cast<int>(std::count(masked.begin(), masked.begin() + static_cast<long>(offset), '\n'));
}

std::vector<Statement> split_statements(const SourceView& view, Language lang) {
    constexpr int kMaxLines = 40;
    std::vector<Statement> out;
    const int n = static_cast<int>(view.masked.size());
    int i = 0;
    while (i < n) {
        Statement st;
        st.first = i;
        int depth = 0;
        for (;;) {
            const auto& line = view.masked[i];
            if (i > st.first) st.masked += '\n';
            st.masked += line;
            for (char c : line) {
                if (c == '(' || c == '[') ++depth;
                else if ((c == ')' || c == ']') && depth > 0) --depth;
            }
            auto t = rtrim(line);
            bool continued = depth > 0 || (lang == Language::python && !t.empty() && t.back() == '\\');
            if (!t.empty() && t.back() == '{') continued = false;
            if (!continued || i + 1 >= n || i - st.first + 1 >= kMaxLines) break;
            ++i;
        }
        st.last = i;
        out.push_back(std::move(st));
        ++i;
    }
    return out;
}

std::string_view call_arguments(std::string_view text, std::size_t open) {
    if (open >= text.size()) return {};
    int depth = 0;
    for (std::size_t k = open; k < text.size(); ++k) {
        char c = text[k];
        if (c == '(') ++depth;
        else if (c == ')' && --depth == 0) return text.substr(open + 1, k - open - 1);
    }
    return text.substr(open + 1);
}

std::string_view first_argument(std::string_view args) {
    int depth = 0;
    for (std::size_t k = 0; k < args.size(); ++k) {
        char c = args[k];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (c == ',' && depth == 0) return args.substr(0, k);
    }
    return args;
}

bool contains_word(std::string_view text, std::string_view name) {
    if (name.empty()) return false;
    for (auto pos = text.find(name); pos != std::string_view::npos; pos = text.find(name, pos + 1)) {
        if (pos > 0 && (is_word(text[pos - 1]) || text[pos - 1] == '.')) continue;
        auto end = pos + name.size();
        if (end < text.size() && is_word(text[end])) continue;
        return true;
    }
    return false;
}

}  // namespace secrefine
