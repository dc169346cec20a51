#pragma once

#include <filesystem>
#include <random>
#include <string>

#ifndef SECREFINE_SOURCE_DIR
#error "SECREFINE_SOURCE_DIR must be defined by the build"
#endif

namespace testsupport {

namespace fs = std::filesystem;

inline fs::path source_dir() { return SECREFINE_SOURCE_DIR; }
inline fs::path data_dir() { return source_dir() / "data"; }

// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag = "t") {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("secrefine-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    fs::path path_;
};

}  // namespace testsupport
