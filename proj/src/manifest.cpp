#include "secrefine/manifest.hpp"

#include <ctime>

#include "secrefine/io.hpp"

namespace secrefine {

namespace fs = std::filesystem;
using nlohmann::json;

json RunManifest::to_json() const {
    json stages_j = json::object();
    for (const auto& [name, s] : stages)
        stages_j[name] = {{"input_digest", s.input_digest},
                          {"output_digest", s.output_digest},
                          {"completed_at", s.completed_at},
                          {"details", s.details}};
    return {{"tool_version", tool_version},
            {"config_digest", config_digest},
            {"input_digests", input_digests},
            {"stages", stages_j},
            {"cells", cells},
            {"sampling", sampling},
            {"created_at", created_at},
            {"updated_at", updated_at}};
}

RunManifest RunManifest::from_json(const json& j) {
    RunManifest m;
    try {
        m.tool_version = j.value("tool_version", "");
        m.config_digest = j.value("config_digest", "");
        m.input_digests = j.value("input_digests", std::map<std::string, std::string>{});
        const auto stages_j = j.value("stages", json::object());
        for (const auto& [name, s] : stages_j.items())
            m.stages[name] = {s.value("input_digest", ""), s.value("output_digest", ""),
                              s.value("completed_at", ""), s.value("details", json::object())};
        m.cells = j.value("cells", std::map<std::string, std::string>{});
        m.sampling = j.value("sampling", json::object());
        m.created_at = j.value("created_at", "");
        m.updated_at = j.value("updated_at", "");
    } catch (const json::exception& e) {
        throw ManifestError(std::string("invalid manifest: ") + e.what());
    }
    return m;
}

RunManifest RunManifest::load(const fs::path& path) {
    if (!fs::exists(path)) return {};
    try {
        return from_json(json::parse(io::read_file(path)));
    } catch (const json::exception& e) {
        throw ManifestError(path.string() + ": " + e.what());
    }
}

void RunManifest::save(const fs::path& path) const {
    io::write_file_atomic(path, to_json().dump(2) + "\n");
}

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string path_digest(const fs::path& path) {
    if (!fs::exists(path)) return "absent";
    if (fs::is_directory(path)) return io::tree_digest(path);
    return io::sha256_hex(io::read_file(path));
}

}  // namespace secrefine
