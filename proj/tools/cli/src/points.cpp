#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bregman_cli/cli.hpp"

namespace bregman::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool try_number(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

double number(std::string_view s, std::string_view what) {
  double v = 0.0;
  if (!try_number(s, v)) throw ValidationError(std::string(what) + ": cannot parse '" + std::string(trim(s)) + "'");
  if (!std::isfinite(v)) throw ValidationError(std::string(what) + ": non-finite value '" + std::string(trim(s)) + "'");
  return v;
}

WeightedParamSet parse_csv(std::string_view text, std::ostream& warn) {
  std::vector<Vector> points;
  std::vector<double> weights;
  bool first = true;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (first) {
      first = false;
      double ignored = 0.0;
      if (!try_number(fields[0], ignored)) continue;  // header
    }
    if (fields.size() < 2) throw ValidationError("points: line " + std::to_string(line_no) + " needs a weight and a coordinate");
    const std::string where = "points line " + std::to_string(line_no);
    weights.push_back(number(fields[0], where));
    Vector p(static_cast<Eigen::Index>(fields.size() - 1));
    for (std::size_t j = 1; j < fields.size(); ++j) p[static_cast<Eigen::Index>(j - 1)] = number(fields[j], where);
    points.push_back(std::move(p));
  }
  return make_weighted_set(std::move(points), Eigen::Map<const Vector>(weights.data(), static_cast<Eigen::Index>(weights.size())), warn);
}

double json_number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw ValidationError(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(where + ": non-finite value");
  return x;
}

WeightedParamSet parse_json(std::string_view text, std::ostream& warn) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("points: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ValidationError("points: JSON input must be an array");
  std::vector<Vector> points;
  Vector weights(static_cast<Eigen::Index>(doc.size()));
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string where = "points entry " + std::to_string(i + 1);
    if (!item.is_object() || !item.contains("weight") || !item.contains("point")) {
      throw ValidationError(where + ": expected {\"weight\": w, \"point\": [...]}");
    }
    weights[static_cast<Eigen::Index>(i)] = json_number(item["weight"], where);
    const auto& pt = item["point"];
    if (pt.is_number()) {
      points.push_back(Vector::Constant(1, json_number(pt, where)));
      continue;
    }
    if (!pt.is_array() || pt.empty()) throw ValidationError(where + ": point must be a number or a non-empty array");
    Vector p(static_cast<Eigen::Index>(pt.size()));
    for (std::size_t j = 0; j < pt.size(); ++j) p[static_cast<Eigen::Index>(j)] = json_number(pt[j], where);
    points.push_back(std::move(p));
  }
  return make_weighted_set(std::move(points), weights, warn);
}

}  // namespace

WeightedParamSet make_weighted_set(std::vector<Vector> points, const Vector& weights, std::ostream& warn) {
  if (points.empty()) throw ValidationError("points: no rows");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != points[0].size()) {
      throw ValidationError("points: row " + std::to_string(i + 1) + " has " + std::to_string(points[i].size()) +
                            " coordinates, expected " + std::to_string(points[0].size()));
    }
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw ValidationError("points: weights must be positive");
  }
  if (std::abs(weights.sum() - 1.0) > 1e-9) {
    warn << "{\"warning\": \"weights sum to " << format_number(weights.sum()) << "; normalized\"}\n";
  }
  return WeightedParamSet::normalized(std::move(points), weights);
}

Vector parse_list(std::string_view text) {
  const auto fields = split(trim(text), ',');
  Vector v(static_cast<Eigen::Index>(fields.size()));
  for (std::size_t i = 0; i < fields.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(fields[i], "list");
  return v;
}

std::vector<Vector> parse_inline_points(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ValidationError("points: empty list");
  std::vector<Vector> points;
  if (text.find(';') == std::string_view::npos) {
    const Vector v = parse_list(text);
    for (double x : v) points.push_back(Vector::Constant(1, x));
    return points;
  }
  for (std::string_view chunk : split(text, ';')) {
    if (trim(chunk).empty()) continue;
    points.push_back(parse_list(chunk));
  }
  if (points.empty()) throw ValidationError("points: empty list");
  return points;
}

WeightedParamSet parse_points(std::string_view text, std::ostream& warn) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ValidationError("points: empty input");
  return body.front() == '[' ? parse_json(body, warn) : parse_csv(body, warn);
}

WeightedParamSet load_points(const std::string& path, std::ostream& warn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("points: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_points(ss.str(), warn);
}

}  // namespace bregman::cli
