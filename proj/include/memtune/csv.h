#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "memtune/matrix.h"

namespace memtune {

/// Matrix snapshot files: one CSV row per from-symbol in alphabet order,
/// optionally preceded by a header row of symbol names. Values written with
/// `significant_digits` decimal digits; 0 selects the shortest
/// representation that parses back to the identical double (used for state
/// files, which are the bit-exact source of truth).
void write_matrix_csv(const std::filesystem::path& path, const Matrix& matrix,
                      const std::vector<std::string>& header, int significant_digits = 0);

std::string matrix_to_csv(const Matrix& matrix, const std::vector<std::string>& header,
                          int significant_digits = 0);

/// Read a matrix CSV, skipping a header row when the first field is not a
/// number. Throws std::runtime_error on malformed or ragged input.
Matrix read_matrix_csv(const std::filesystem::path& path);

Matrix matrix_from_csv(const std::string& text, const std::string& origin = "<string>");

/// Format a double with to_chars: shortest round-trip form when
/// significant_digits == 0, general format with that many digits otherwise.
std::string format_value(double value, int significant_digits = 0);

} // namespace memtune
