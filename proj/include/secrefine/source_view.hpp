#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "secrefine/types.hpp"

namespace secrefine {

// Two line-aligned views of a source file. `code` blanks comments; `masked` also blanks
// string contents but keeps quotes and interpolated expressions (f"{x}", `${x}`).
struct SourceView {
    std::vector<std::string> code;
    std::vector<std::string> masked;

    std::size_t line_count() const { return code.size(); }
};

SourceView make_source_view(std::string_view text, Language lang);

// A logical statement: consecutive masked lines joined with '\n' while brackets stay open.
struct Statement {
    int first = 0;  // 0-based line indices, inclusive
    int last = 0;
    std::string masked;

    int line_at(std::size_t offset) const;
};

std::vector<Statement> split_statements(const SourceView& view, Language lang);

// Text between the '(' at `open` and its matching ')', exclusive. Runs to the end if unbalanced.
std::string_view call_arguments(std::string_view text, std::size_t open);

// First top-level comma-separated argument of an argument list.
std::string_view first_argument(std::string_view args);

// `name` occurs in `text` not preceded by [\w.] and not followed by \w.
bool contains_word(std::string_view text, std::string_view name);

}  // namespace secrefine
