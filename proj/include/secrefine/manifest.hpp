#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "secrefine/types.hpp"

namespace secrefine {

inline constexpr std::string_view kToolVersion = "0.1.0";

class ManifestError : public Error {
public:
    using Error::Error;
};

struct StageRecord {
    std::string input_digest;
    std::string output_digest;
    std::string completed_at;
    nlohmann::json details = nlohmann::json::object();
};

struct RunManifest {
    std::string tool_version{kToolVersion};
    std::string config_digest;
    std::map<std::string, std::string> input_digests;  // corpus, rules, severity_table, ...
    std::map<std::string, StageRecord> stages;
    std::map<std::string, std::string> cells;          // cell path -> "complete" | "failed"
    nlohmann::json sampling = nlohmann::json::object();
    std::string created_at;
    std::string updated_at;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);

    // Missing file yields an empty manifest.
    static RunManifest load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

std::string utc_timestamp();

// sha256 of a file, or of a directory tree; "absent" when the path does not exist.
std::string path_digest(const std::filesystem::path& path);

}  // namespace secrefine
