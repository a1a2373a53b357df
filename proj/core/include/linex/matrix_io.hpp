#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "linex/bit_matrix.hpp"

namespace linex {

// Text format:
//   k n
//   <n characters of 0/1>   (k lines)
// Blank lines after the last row are ignored; '\r' line endings accepted.

[[nodiscard]] BitMatrix parse_matrix(std::string_view text);
[[nodiscard]] std::string serialize_matrix(const BitMatrix& g);

[[nodiscard]] BitMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const BitMatrix& g);

}  // namespace linex
