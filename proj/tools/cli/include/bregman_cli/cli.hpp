#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bregman/bregman.hpp"

namespace bregman::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kNotConverged = 2 };

/// Runs one job. args excludes the program name. Results go to `out`,
/// warnings and the one-line error object to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a weighted point set from a CSV file (optional header w,x1,...,xm)
/// or a JSON array of {"weight": w, "point": [...]}. Weights that do not sum
/// to 1 within 1e-9 are normalized and a warning is written to `warn`.
WeightedParamSet load_points(const std::string& path, std::ostream& warn);

/// Same as load_points on in-memory text.
WeightedParamSet parse_points(std::string_view text, std::ostream& warn);

/// Validates equal dimensions and positive weights, normalizing (with a
/// warning) when the weights do not sum to 1 within 1e-9.
WeightedParamSet make_weighted_set(std::vector<Vector> points, const Vector& weights, std::ostream& warn);

/// Inline point list: ';' between points, ',' between coordinates. Without a
/// ';' every entry is a scalar point.
std::vector<Vector> parse_inline_points(std::string_view text);

/// Comma-separated numbers.
Vector parse_list(std::string_view text);

/// %.17g, with "null" for non-finite values.
std::string format_number(double x);

}  // namespace bregman::cli
