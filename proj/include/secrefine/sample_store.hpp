#pragma once

#include <chrono>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "secrefine/types.hpp"

namespace secrefine {

struct CodeSample {
    SampleKey key;
    std::string served_by;  // model spec that answered (the fine-tuned spec for ft)
    std::string model_name;
    std::string raw_response;
    std::string extracted_code;
    std::string prompt_sha256;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    // Run-manifest side; not persisted in the store itself.
    std::chrono::milliseconds generation_time{0};
    std::optional<long> memory_used;
    std::string created_at;
};

// On-disk layout: <root>/<model>/<technique>/<language>/scenario_<id>/sample_<i>.<ext> + sample_<i>.meta.
// Writes are serialized and atomic; everything persisted is a function of provenance and content only.
class SampleStore {
public:
    explicit SampleStore(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    void write(const CodeSample& sample);
    bool contains(const SampleKey& key) const;
    CodeSample read(const SampleKey& key) const;

    // Every sample key present, in provenance order.
    std::vector<SampleKey> keys() const;

    std::filesystem::path code_path(const SampleKey& key) const;
    std::filesystem::path meta_path(const SampleKey& key) const;

    std::optional<std::string> meta_prompt(const std::string& model_id) const;
    void write_meta_prompt(const std::string& model_id, const std::string& text);

    void mark_cell_complete(const CellKey& cell);
    bool cell_complete(const CellKey& cell) const;

private:
    std::filesystem::path root_;
    mutable std::mutex mutex_;
};

}  // namespace secrefine
