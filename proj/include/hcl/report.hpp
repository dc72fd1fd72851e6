#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hcl {

/// Envelope printed by every CLI command.
/// all_hold is the conjunction of every "holds" verdict found in results.
struct RunReport {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<nlohmann::ordered_json> results;
  bool all_hold = true;
  std::optional<long long> elapsed_ms;  // only set when timing is requested

  nlohmann::ordered_json to_json() const;
  /// One line per result, then a summary line without the results.
  std::string to_json_lines() const;
};

/// x rounded to 12 significant digits.
double round12(double x);

/// "%.12g", with "inf", "-inf" and "nan" for non-finite values.
std::string format12(double x);

/// Rounds every floating-point leaf to 12 significant digits.
nlohmann::ordered_json rounded(const nlohmann::ordered_json& j);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Header plus rows, LF line endings, fields quoted when they contain a
/// comma, quote, CR or LF. Throws IoError when the file cannot be written.
void write_csv(const CsvTable& table, const std::filesystem::path& path);
std::string to_csv(const CsvTable& table);

}  // namespace hcl
