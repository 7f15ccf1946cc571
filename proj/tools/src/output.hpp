#pragma once

#include <filesystem>
#include <string>

namespace wba::cli {

/// Writes to a sibling temporary file and renames it over path, so readers
/// never see a half-written file.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double x);

}  // namespace wba::cli
