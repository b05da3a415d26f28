#include "output.hpp"

#include <cmath>
#include <cstdio>

#include "bregman_cli/cli.hpp"

namespace bregman::cli {

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_array(const Vector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v[i]);
  }
  return out + "]";
}

std::string json_rows(const std::vector<Vector>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += json_array(rows[i]);
  }
  return out + "]";
}

JsonObject& JsonObject::add(const std::string& key, double v) { return add_raw(key, format_number(v)); }
JsonObject& JsonObject::add(const std::string& key, const Vector& v) { return add_raw(key, json_array(v)); }
JsonObject& JsonObject::add(const std::string& key, const std::vector<Vector>& rows) {
  return add_raw(key, json_rows(rows));
}
JsonObject& JsonObject::add(const std::string& key, bool v) { return add_raw(key, v ? "true" : "false"); }
JsonObject& JsonObject::add(const std::string& key, int v) { return add_raw(key, std::to_string(v)); }
JsonObject& JsonObject::add(const std::string& key, const char* v) { return add_raw(key, json_string(v)); }

JsonObject& JsonObject::add_raw(const std::string& key, const std::string& json) {
  fields_.emplace_back(key, json);
  return *this;
}

std::string JsonObject::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ", ";
    out += json_string(fields_[i].first) + ": " + fields_[i].second;
  }
  return out + "}";
}

void CsvTable::row(const std::vector<double>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += std::isfinite(values[i]) ? format_number(values[i]) : "nan";
  }
  rows_.push_back(std::move(line));
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const auto& r : rows_) out += r + '\n';
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace bregman::cli
