#include "secrefine/sample_store.hpp"

#include <algorithm>

#include <json.hpp>

#include "secrefine/io.hpp"

namespace secrefine {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {
constexpr const char* kCompleteMarker = ".complete";
}

SampleStore::SampleStore(fs::path root) : root_(std::move(root)) { fs::create_directories(root_); }

fs::path SampleStore::code_path(const SampleKey& key) const {
    return root_ / key.cell_path() /
           ("sample_" + std::to_string(key.sample_index) + "." + std::string(file_extension(key.language)));
}

fs::path SampleStore::meta_path(const SampleKey& key) const {
    return root_ / key.cell_path() / ("sample_" + std::to_string(key.sample_index) + ".meta");
}

void SampleStore::write(const CodeSample& s) {
    json meta{{"key", s.key.str()},
              {"model_id", s.key.model_id},
              {"technique", std::string(to_string(s.key.technique))},
              {"language", std::string(to_string(s.key.language))},
              {"scenario_id", s.key.scenario_id},
              {"sample_index", s.key.sample_index},
              {"served_by", s.served_by},
              {"model_name", s.model_name},
              {"prompt_sha256", s.prompt_sha256},
              {"prompt_tokens", s.prompt_tokens},
              {"completion_tokens", s.completion_tokens},
              {"raw_response", s.raw_response}};
    std::lock_guard lock(mutex_);
    io::write_file_atomic(code_path(s.key), s.extracted_code);
    // The .meta file is written last: its presence means the sample is complete.
    io::write_file_atomic(meta_path(s.key), meta.dump(2) + "\n");
}

bool SampleStore::contains(const SampleKey& key) const {
    return fs::exists(meta_path(key)) && fs::exists(code_path(key));
}

CodeSample SampleStore::read(const SampleKey& key) const {
    auto meta = json::parse(io::read_file(meta_path(key)));
    CodeSample s;
    s.key = key;
    s.served_by = meta.value("served_by", "");
    s.model_name = meta.value("model_name", "");
    s.prompt_sha256 = meta.value("prompt_sha256", "");
    s.prompt_tokens = meta.value("prompt_tokens", 0L);
    s.completion_tokens = meta.value("completion_tokens", 0L);
    s.raw_response = meta.value("raw_response", "");
    s.extracted_code = io::read_file(code_path(key));
    return s;
}

std::vector<SampleKey> SampleStore::keys() const {
    std::vector<SampleKey> out;
    for (const auto& rel : io::list_files(root_)) {
        if (!rel.ends_with(".meta")) continue;
        auto stem = rel.substr(0, rel.size() - 5);
        try {
            out.push_back(SampleKey::parse(stem));
        } catch (const Error&) {
            // stray file, not a sample
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::string> SampleStore::meta_prompt(const std::string& model_id) const {
    auto path = root_ / model_id / "meta_prompt.txt";
    if (!fs::exists(path)) return std::nullopt;
    return io::read_file(path);
}

void SampleStore::write_meta_prompt(const std::string& model_id, const std::string& text) {
    std::lock_guard lock(mutex_);
    io::write_file_atomic(root_ / model_id / "meta_prompt.txt", text);
}

void SampleStore::mark_cell_complete(const CellKey& cell) {
    std::lock_guard lock(mutex_);
    io::write_file_atomic(root_ / cell.str() / kCompleteMarker, "complete\n");
}

bool SampleStore::cell_complete(const CellKey& cell) const { return fs::exists(root_ / cell.str() / kCompleteMarker); }

}  // namespace secrefine
