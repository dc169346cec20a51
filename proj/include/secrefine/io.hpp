#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace secrefine::io {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path);

// Writes through a temporary sibling and renames, so readers never observe a partial file.
void write_file_atomic(const fs::path& path, std::string_view content);

void append_line(const fs::path& path, std::string_view line);

std::string sha256_hex(std::string_view data);

// Digest over every regular file below root: relative path and content, in sorted path order.
std::string tree_digest(const fs::path& root);

// Sorted list of regular files under root, as paths relative to root with '/' separators.
std::vector<std::string> list_files(const fs::path& root);

std::vector<std::string> split_lines(std::string_view text);

}  // namespace secrefine::io
