#pragma once

#include <string>
#include <vector>

#include "bregman/numerics.hpp"

namespace bregman::cli {

std::string json_string(const std::string& s);
std::string json_array(const Vector& v);
std::string json_rows(const std::vector<Vector>& rows);

// Single-line JSON object with keys in insertion order.
class JsonObject {
 public:
  JsonObject& add(const std::string& key, double v);
  JsonObject& add(const std::string& key, const Vector& v);
  JsonObject& add(const std::string& key, const std::vector<Vector>& rows);
  JsonObject& add(const std::string& key, bool v);
  JsonObject& add(const std::string& key, int v);
  JsonObject& add(const std::string& key, const char* v);
  JsonObject& add_raw(const std::string& key, const std::string& json);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(const std::vector<double>& values);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

std::vector<std::string> numbered(const std::string& prefix, int n);

}  // namespace bregman::cli
