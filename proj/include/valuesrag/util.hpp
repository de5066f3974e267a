#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace valuesrag {

/// SHA-256 digest of a byte string, as lowercase hex.
std::string sha256_hex(std::string_view data);

/// 64-bit FNV-1a, used for fast non-cryptographic keying.
std::uint64_t fnv1a64(std::string_view data);

/// Lowercased alphanumeric token runs ("Young, urban TEACHER!" -> {young, urban, teacher}).
std::vector<std::string> tokenize(std::string_view text);

/// Jaccard overlap of the token sets of two texts; 0 when both are empty.
double token_overlap(std::string_view a, std::string_view b);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Atomic replace: write to a sibling temp file, then rename over the target.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

std::vector<std::string> split(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string trim(std::string_view text);

/// Shortest round-trip decimal form of a double (stable across runs).
std::string format_double(double value);

}  // namespace valuesrag
