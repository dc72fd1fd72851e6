#include "hcl/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hcl/error.hpp"

namespace hcl {
namespace {

bool collect_holds(const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key == "holds" && value.is_boolean() && !value.get<bool>()) return false;
      if (!collect_holds(value)) return false;
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (!collect_holds(value)) return false;
    }
  }
  return true;
}

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += quote_field(row[i]);
  }
  out += '\n';
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::ordered_json rounded(const nlohmann::ordered_json& j) {
  if (j.is_number_float()) return round12(j.get<double>());
  if (j.is_object()) {
    auto out = nlohmann::ordered_json::object();
    for (const auto& [key, value] : j.items()) out[key] = rounded(value);
    return out;
  }
  if (j.is_array()) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& value : j) out.push_back(rounded(value));
    return out;
  }
  return j;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["params"] = rounded(params);
  auto list = nlohmann::ordered_json::array();
  bool holds = all_hold;
  for (const auto& r : results) {
    list.push_back(rounded(r));
    holds = holds && collect_holds(r);
  }
  j["results"] = std::move(list);
  j["all_hold"] = holds;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

std::string RunReport::to_json_lines() const {
  auto j = to_json();
  std::string out;
  for (const auto& r : j["results"]) out += r.dump() + "\n";
  j.erase("results");
  out += j.dump() + "\n";
  return out;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  append_row(out, table.header);
  for (const auto& row : table.rows) append_row(out, row);
  return out;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  const auto text = to_csv(table);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

}  // namespace hcl
