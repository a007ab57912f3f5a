#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "stratarium/geometry.hpp"

namespace stratarium {

/// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

/// One point per row, comma-separated shortest round-trip decimals. With `header`,
/// a leading `x0,x1,...` line.
std::string to_csv(const PointSet& points, bool header = false);

/// Parses rows of comma-separated reals into a matrix. A first line that does not
/// start with a number is treated as a header and skipped.
PointMatrix parse_csv(std::string_view text);

std::string to_json(const Stratification& strat);
Stratification stratification_from_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes via a temporary file in the same directory followed by a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace stratarium
