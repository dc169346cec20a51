#include "secrefine/provider.hpp"

#include <cctype>
#include <cstdlib>

#include <json.hpp>

#include "secrefine/io.hpp"

namespace secrefine {

namespace fs = std::filesystem;

long approximate_tokens(std::string_view text) {
    long n = 0;
    bool in_word = false;
    for (char c : text) {
        bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (!space && !in_word) ++n;
        in_word = !space;
    }
    return n;
}

ReplayProvider::ReplayProvider(fs::path root) : root_(std::move(root)) {
    if (!fs::is_directory(root_)) throw Error(root_.string() + ": replay fixture directory not found");
}

fs::path ReplayProvider::fixture_path(const fs::path& root, const std::string& key) {
    return root / (key + ".txt");
}

Completion ReplayProvider::complete(const CompletionRequest& request) {
    auto path = fixture_path(root_, request.fixture_key);
    if (!fs::exists(path)) throw ProviderError("no replay fixture for '" + request.fixture_key + "'");
    Completion c;
    c.text = io::read_file(path);
    c.prompt_tokens = approximate_tokens(request.system) + approximate_tokens(request.user);
    c.completion_tokens = approximate_tokens(c.text);
    return c;
}

}  // namespace secrefine
