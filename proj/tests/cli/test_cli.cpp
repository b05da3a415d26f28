#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "bregman_cli/cli.hpp"

namespace cli = bregman::cli;
using bregman::Vector;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("bregman_cli_" + name);
  std::ofstream(path) << body;
  return path;
}

// Runs the installed binary through the shell and returns stdout and exit code.
std::pair<std::string, int> exec(const std::string& args) {
  const std::string cmd = std::string(BREGMAN_CLI_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {out, WEXITSTATUS(status)};
}

}  // namespace

TEST(CliDiv, BurgExample) {
  const auto r = run({"div", "--generator", "burg", "--left", "1", "--right", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"value\": 0.19314718055994531}\n");
}

TEST(CliDiv, ZeroOnEqualArguments) {
  EXPECT_EQ(run({"div", "--generator", "burg", "--left", "1", "--right", "1"}).out, "{\"value\": 0}\n");
}

TEST(CliDiv, MatchesLibraryBitForBit) {
  const auto g = bregman::make_extended_kl(2);
  Vector a(2), b(2);
  a << 0.3, 1.7;
  b << 2.2, 0.4;
  const auto r = run({"div", "--generator", "extended-kl", "--left", "0.3,1.7", "--right", "2.2,0.4"});
  EXPECT_EQ(r.out, "{\"value\": " + cli::format_number(bregman::bregman(g, a, b)) + "}\n");
  const auto s = run({"div", "--generator", "extended-kl", "--kind", "symmetrized", "--left", "0.3,1.7", "--right",
                      "2.2,0.4", "--format", "csv"});
  EXPECT_EQ(s.out, "value\n" + cli::format_number(bregman::symmetrized(g, a, b)) + "\n");
}

TEST(CliDiv, AlphaKind) {
  Vector a(2), b(2);
  a << 0.5, 1.5;
  b << 1.0, 2.0;
  const auto r = run({"div", "--kind", "alpha", "--alpha", "0.5", "--left", "0.5,1.5", "--right", "1,2"});
  EXPECT_EQ(r.out, "{\"value\": " + cli::format_number(bregman::alpha_divergence(0.5, a, b)) + "}\n");
}

TEST(CliDiv, Errors) {
  auto r = run({"div", "--generator", "nope", "--left", "1", "--right", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "{\"error\": \"validation\", \"message\": \"unknown generator 'nope'\"}\n");
  r = run({"div", "--generator", "burg", "--left", "1,2", "--right", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("dimension"), std::string::npos);
  r = run({"div", "--generator", "burg", "--left", "-1", "--right", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("{\"error\": \"domain\"", 0), 0u);
  r = run({"div", "--generator", "burg", "--left", "1", "--right", "nan"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"div", "--format", "xml", "--generator", "burg", "--left", "1", "--right", "2"}).code, 1);
}

TEST(CliCentroid, CoshExample) {
  const auto r = run({"centroid", "--kind", "cosh", "--points", "1,2", "--weights", "0.5,0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"value\": 1.4142135623730951}\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliCentroid, UnnormalizedWeightsWarn) {
  const auto r = run({"centroid", "--kind", "cosh", "--points", "1,2", "--weights", "1,1"});
  EXPECT_EQ(r.out, "{\"value\": 1.4142135623730951}\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliCentroid, VectorPointsAndKinds) {
  auto r = run({"centroid", "--kind", "right", "--points", "1,2;3,4"});
  EXPECT_EQ(r.out, "{\"value\": [2, 3]}\n");
  EXPECT_TRUE(r.err.empty());
  r = run({"centroid", "--kind", "left", "--generator", "burg", "--points", "1;3", "--format", "csv"});
  EXPECT_EQ(r.out, "x1\n1.5\n");
  r = run({"centroid", "--kind", "logdet", "--points", "2,0,1;1,0,3"});
  EXPECT_EQ(r.out, "{\"value\": [[1.4142135623730951, 0], [0, 1.7320508075688772]]}\n");
  r = run({"centroid", "--kind", "jeffreys-categorical", "--points", "0.2,0.3,0.5;0.6,0.3,0.1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"centroid", "--kind", "median", "--points", "1,2"}).code, 1);
  EXPECT_EQ(run({"centroid", "--kind", "left", "--points", "1,2"}).code, 1);
}

TEST(CliPoints, CsvWithAndWithoutHeader) {
  std::ostringstream warn;
  const auto plain = cli::parse_points("0.5,1\n0.5,2", warn);
  EXPECT_EQ(plain.size(), 2);
  EXPECT_DOUBLE_EQ(plain.point(1)[0], 2.0);
  EXPECT_DOUBLE_EQ(plain.weight(0), 0.5);
  EXPECT_TRUE(warn.str().empty());
  const auto header = cli::parse_points("w,x1,x2\n1,1,2\n3,3,4\n", warn);
  EXPECT_EQ(header.dim(), 2);
  EXPECT_DOUBLE_EQ(header.weight(1), 0.75);
  EXPECT_NE(warn.str().find("warning"), std::string::npos);
}

TEST(CliPoints, Json) {
  std::ostringstream warn;
  const auto s = cli::parse_points(R"([{"weight": 0.25, "point": [1, 2]}, {"weight": 0.75, "point": [3, 4]}])", warn);
  EXPECT_EQ(s.size(), 2);
  EXPECT_DOUBLE_EQ(s.point(1)[1], 4.0);
  const auto scalar = cli::parse_points(R"([{"weight": 1, "point": 5}])", warn);
  EXPECT_DOUBLE_EQ(scalar.point(0)[0], 5.0);
}

TEST(CliPoints, Rejections) {
  std::ostringstream warn;
  EXPECT_THROW(cli::parse_points("", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points("w,x1\n", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points("0.5,1\n0.5,2,3", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points("0.5,1\n0.5,nan", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points("0.5,1\n-0.5,2", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points("0,1\n1,2", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points("0.5,1\n0.5,x", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points(R"([{"weight": 1}])", warn), bregman::ValidationError);
  EXPECT_THROW(cli::parse_points(R"([{"weight": 1, "point": [1, 2]}, {"weight": 1, "point": [1]}])", warn),
               bregman::ValidationError);
  EXPECT_THROW(cli::parse_points("[1, 2", warn), bregman::ValidationError);
  EXPECT_THROW(cli::load_points("/nonexistent/points.csv", warn), bregman::ValidationError);
}

TEST(CliPoints, InlineSyntax) {
  auto pts = cli::parse_inline_points("1,2");
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].size(), 1);
  pts = cli::parse_inline_points("1,2;");
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].size(), 2);
  pts = cli::parse_inline_points(" 1, 2 ; 3, 4 ");
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_DOUBLE_EQ(pts[1][1], 4.0);
  EXPECT_THROW(cli::parse_inline_points(";"), bregman::ValidationError);
  EXPECT_THROW(cli::parse_inline_points("1,,2"), bregman::ValidationError);
}

TEST(CliPoints, FileInput) {
  const auto path = temp_file("points.csv", "w,x1\n0.5,1\n0.5,2\n");
  const auto r = run({"centroid", "--kind", "cosh", "--points", path.string()});
  EXPECT_EQ(r.out, "{\"value\": 1.4142135623730951}\n");
  EXPECT_EQ(run({"centroid", "--kind", "cosh", "--points", path.string(), "--weights", "1,1"}).code, 1);
  std::filesystem::remove(path);
}

TEST(CliCccp, TraceRowsAndConvergence) {
  const auto r = run({"cccp-trace", "--generator", "extended-kl", "--points", "1,2,5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "round,theta1,objective");
  int rows = 0;
  std::string last;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind(std::to_string(rows) + ",", 0), 0u);
    last = line;
    ++rows;
  }
  EXPECT_GE(rows, 2);
  const double theta = std::stod(last.substr(last.find(',') + 1));
  const auto set = bregman::WeightedParamSet::scalars({1, 2, 5}, Vector::Ones(3));
  EXPECT_NEAR(theta, bregman::jeffreys_centroid_1d(set), 1e-3);
}

TEST(CliCccp, NonConvergenceExitsTwo) {
  const auto r = run({"cccp-trace", "--generator", "extended-kl", "--points", "1,50", "--max-iter", "1",
                      "--no-accelerate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("\"converged\": false"), std::string::npos);
  EXPECT_NE(r.err.find("\"error\": \"convergence\""), std::string::npos);
  EXPECT_EQ(run({"cccp-trace", "--generator", "burg", "--points", "1,2", "--mode", "sideways"}).code, 1);
}

TEST(CliSpheres, EuclideanTangentAndAlpha) {
  auto r = run({"sphere-intersect", "--generator", "quadratic", "--centers", "0,0;2,0", "--radii", "0.5,0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("{\"points\": [[1, ", 0), 0u);
  r = run({"sphere-intersect", "--alpha", "0", "--centers", "0.5,0.3,0.2;0.3,0.5,0.2", "--radii", "0.08,0.08",
           "--simplex", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("x1,x2,x3,residual1,residual2\n", 0), 0u);
  EXPECT_EQ(run({"sphere-intersect", "--generator", "quadratic", "--centers", "0,0;2,0", "--radii", "0.5"}).code, 1);
}

TEST(CliProject, CircleProjections) {
  auto r = run({"project", "--target", "2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"u\": [0.785398163"), std::string::npos);
  r = run({"project", "--points", "0,3.141592653589793"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ambiguous"), std::string::npos);
}

TEST(CliBinary, DeterministicOutputAndExitCodes) {
  const std::string args = "project --target 0.3,-1.2 --seed 7";
  const auto a = exec(args);
  const auto b = exec(args);
  EXPECT_EQ(a.second, 0);
  EXPECT_FALSE(a.first.empty());
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(exec("div --generator burg --left 1 --right 2").first, "{\"value\": 0.19314718055994531}\n");
  EXPECT_EQ(exec("div --generator burg --left 0 --right 2").second, 1);
  EXPECT_EQ(exec("cccp-trace --generator burg --points 1,40 --max-iter 1 --no-accelerate").second, 2);
}
