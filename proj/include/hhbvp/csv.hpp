#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hhbvp::csv {

/// Shortest decimal form that parses back to the identical double
/// (round-trippable formatting).
[[nodiscard]] std::string format_double(double v);

/// Strict full-string double parse; throws std::invalid_argument on trailing
/// garbage or empty input.
[[nodiscard]] double parse_double(std::string_view text);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Comma separator, '.' decimal point, line-feed terminators, header row.
void write_csv(const std::filesystem::path& path, const Table& table);
[[nodiscard]] Table read_csv(const std::filesystem::path& path);

}  // namespace hhbvp::csv
