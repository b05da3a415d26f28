#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "bregman_cli/cli.hpp"
#include "output.hpp"

namespace bregman::cli {

namespace {

struct Common {
  std::string generator;
  std::string format = "json";
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  double epsilon = 1e-4;
  int max_iter = 1000;
  std::string points;
  std::string weights;
};

bool csv(const Common& c) { return c.format == "csv"; }

int triangular_root(int n) {
  const int d = static_cast<int>(std::lround((std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0));
  return d * (d + 1) / 2 == n ? d : -1;
}

// Parameter dimension n fixes the generator size: logdet takes packed d x d
// matrices, shannon the first m-1 probabilities, gaussian d + d(d+1)/2
// natural coordinates.
LegendreGenerator make_generator(const Common& c, int n) {
  const std::string& name = c.generator;
  if (name.empty()) throw ValidationError("--generator is required");
  if (n < 1) throw ValidationError("generator: empty parameter");
  if (name == "quadratic") return make_quadratic(SpdMatrix::identity(n));
  if (name == "extended-kl" || name == "kl") return make_extended_kl(n);
  if (name == "burg" || name == "itakura-saito") return make_burg(n);
  if (name == "shannon") return make_shannon_simplex(n + 1);
  if (name == "logdet") {
    const int d = triangular_root(n);
    if (d < 1) throw ValidationError("logdet: parameter length must be d(d+1)/2");
    return make_logdet(d);
  }
  if (name == "gaussian") {
    for (int d = 1; d <= 64; ++d) {
      if (d + d * (d + 1) / 2 == n) return make_gaussian_cumulant(d);
    }
    throw ValidationError("gaussian: parameter length must be d + d(d+1)/2");
  }
  if (name == "alpha") {
    if (!c.alpha) throw ValidationError("alpha generator needs --alpha");
    return make_alpha_generator(*c.alpha, n);
  }
  throw ValidationError("unknown generator '" + name + "'");
}

WeightedParamSet read_set(const Common& c, std::ostream& err) {
  if (c.points.empty()) throw ValidationError("--points is required");
  std::error_code ec;
  if (std::filesystem::is_regular_file(c.points, ec)) {
    if (!c.weights.empty()) throw ValidationError("--weights cannot be combined with a points file");
    return load_points(c.points, err);
  }
  auto pts = parse_inline_points(c.points);
  const auto n = static_cast<Eigen::Index>(pts.size());
  const Vector w = c.weights.empty() ? Vector::Constant(n, 1.0 / static_cast<double>(n)) : parse_list(c.weights);
  return make_weighted_set(std::move(pts), w, err);
}

std::vector<Vector> flat_rows(const Matrix& m) {
  std::vector<Vector> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).transpose());
  return rows;
}

void emit_scalar(const Common& c, std::ostream& out, double v) {
  if (csv(c)) {
    CsvTable t({"value"});
    t.row({v});
    out << t.str();
  } else {
    out << JsonObject().add("value", v).str() << '\n';
  }
}

void emit_vector(const Common& c, std::ostream& out, const Vector& v) {
  if (csv(c)) {
    CsvTable t(numbered("x", static_cast<int>(v.size())));
    t.row(std::vector<double>(v.begin(), v.end()));
    out << t.str();
  } else {
    out << JsonObject().add("value", v).str() << '\n';
  }
}

void emit_matrix(const Common& c, std::ostream& out, const Matrix& m) {
  const auto rows = flat_rows(m);
  if (csv(c)) {
    CsvTable t(numbered("c", static_cast<int>(m.cols())));
    for (const auto& r : rows) t.row(std::vector<double>(r.begin(), r.end()));
    out << t.str();
  } else {
    out << JsonObject().add("value", rows).str() << '\n';
  }
}

// -- div -----------------------------------------------------------------------

struct DivArgs {
  std::string left, right, kind = "bregman";
  double skew = 0.5, awq_alpha = 1.0, awq_beta = 1.0;
};

int run_div(const Common& c, const DivArgs& a, std::ostream& out) {
  if (a.left.empty() || a.right.empty()) throw ValidationError("div needs --left and --right");
  const Vector l = parse_list(a.left);
  const Vector r = parse_list(a.right);
  if (l.size() != r.size()) throw ValidationError("div: --left and --right differ in dimension");
  double v = 0.0;
  if (a.kind == "alpha") {
    if (!c.alpha) throw ValidationError("div --kind alpha needs --alpha");
    v = alpha_divergence(*c.alpha, l, r);
  } else {
    const LegendreGenerator g = make_generator(c, static_cast<int>(l.size()));
    if (a.kind == "bregman") {
      v = bregman(g, l, r);
    } else if (a.kind == "symmetrized") {
      v = symmetrized(g, l, r);
    } else if (a.kind == "jensen") {
      v = jensen(g, l, r);
    } else if (a.kind == "skew-jensen") {
      v = skew_jensen(g, a.skew, l, r);
    } else if (a.kind == "awq") {
      v = awq_divergence(g, a.awq_alpha, a.awq_beta, l, r);
    } else {
      throw ValidationError("unknown divergence kind '" + a.kind + "'");
    }
  }
  emit_scalar(c, out, v);
  return kOk;
}

// -- centroid ------------------------------------------------------------------

int run_centroid(const Common& c, const std::string& kind, std::ostream& out, std::ostream& err) {
  const WeightedParamSet set = read_set(c, err);
  if (kind == "right") {
    emit_vector(c, out, right_centroid(set));
  } else if (kind == "left") {
    emit_vector(c, out, left_centroid(make_generator(c, set.dim()), set));
  } else if (kind == "information") {
    emit_scalar(c, out, bregman_information(make_generator(c, set.dim()), set));
  } else if (kind == "cosh") {
    emit_scalar(c, out, cosh_centroid(set));
  } else if (kind == "jeffreys") {
    emit_scalar(c, out, jeffreys_centroid_1d(set));
  } else if (kind == "jeffreys-categorical") {
    emit_vector(c, out, jeffreys_centroid_categorical(set));
  } else if (kind == "logdet") {
    const int d = triangular_root(set.dim());
    if (d < 1) throw ValidationError("logdet centroid: points must be packed d(d+1)/2 vectors");
    std::vector<SpdMatrix> mats;
    for (const Vector& p : set.points()) mats.emplace_back(unpack_symmetric(p, d));
    emit_matrix(c, out, logdet_cosh_centroid(mats, set.weights()).matrix());
  } else {
    throw ValidationError("unknown centroid kind '" + kind + "'");
  }
  return kOk;
}

// -- project -------------------------------------------------------------------

struct ProjectArgs {
  std::string model = "circle";
  double radius = 1.0;
  std::string axes = "1,1";
  std::string center = "0,0";
  std::string target;
  std::string init = "0";
  int starts = 8;
};

int run_project(const Common& c, const ProjectArgs& a, std::ostream& out, std::ostream& err) {
  const Vector center = parse_list(a.center);
  CurvedModel model;
  if (a.model == "circle") {
    model = make_circle_model(a.radius, center);
  } else if (a.model == "ellipse") {
    const Vector ax = parse_list(a.axes);
    if (ax.size() != 2) throw ValidationError("--axes takes two semi-axes");
    model = make_ellipse_model(ax[0], ax[1], center);
  } else {
    throw ValidationError("unknown model '" + a.model + "'");
  }
  Common gc = c;
  if (gc.generator.empty()) gc.generator = "quadratic";
  const LegendreGenerator g = make_generator(gc, model.theta_dim);

  CurvedSearchOptions opts;
  opts.seed = c.seed;
  opts.max_iter = c.max_iter;
  opts.perturbations = a.starts;
  if (c.tol) opts.grad_tol = *c.tol;
  const Vector init = parse_list(a.init);

  Vector target;
  Vector u;
  if (!a.target.empty()) {
    if (!c.points.empty()) throw ValidationError("project takes either --target or --points");
    target = parse_list(a.target);
    u = curved_projection(g, model, target, init, opts);
  } else {
    const WeightedParamSet us = read_set(c, err);
    target = right_centroid(us.map([&](const Vector& x) { return model.theta(x); }));
    u = curved_centroid(g, model, us, init, opts);
  }
  const Vector theta = model.theta(u);
  const double d = bregman(g, target, theta);
  if (csv(c)) {
    auto header = numbered("u", static_cast<int>(u.size()));
    for (auto& h : numbered("theta", static_cast<int>(theta.size()))) header.push_back(h);
    header.push_back("divergence");
    CsvTable t(header);
    std::vector<double> row(u.begin(), u.end());
    row.insert(row.end(), theta.begin(), theta.end());
    row.push_back(d);
    t.row(row);
    out << t.str();
  } else {
    out << JsonObject().add("u", u).add("theta", theta).add("divergence", d).str() << '\n';
  }
  return kOk;
}

// -- sphere-intersect ------------------------------------------------------------

struct SphereArgs {
  std::string centers, radii, side = "right";
  bool simplex = false;
  int grid = 256;
};

int run_spheres(const Common& c, const SphereArgs& a, std::ostream& out) {
  if (a.centers.empty() || a.radii.empty()) throw ValidationError("sphere-intersect needs --centers and --radii");
  const std::vector<Vector> centers = parse_inline_points(a.centers);
  const Vector radii = parse_list(a.radii);
  if (static_cast<std::size_t>(radii.size()) != centers.size()) {
    throw ValidationError("sphere-intersect: one radius per center");
  }
  IntersectionResult res;
  if (c.alpha && c.generator.empty()) {
    std::vector<AlphaSphere> spheres;
    for (std::size_t i = 0; i < centers.size(); ++i) spheres.push_back({centers[i], radii[static_cast<Eigen::Index>(i)]});
    res = alpha_sphere_intersection(*c.alpha, spheres, a.simplex, a.grid);
  } else {
    if (a.simplex) throw ValidationError("--simplex applies to alpha spheres only");
    const LegendreGenerator g = make_generator(c, static_cast<int>(centers.front().size()));
    SphereSide side;
    if (a.side == "right") {
      side = SphereSide::right;
    } else if (a.side == "left") {
      side = SphereSide::left;
    } else {
      throw ValidationError("--side must be left or right");
    }
    std::vector<BregmanSphere> spheres;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      spheres.emplace_back(g, centers[i], radii[static_cast<Eigen::Index>(i)], side);
    }
    res = side == SphereSide::right ? intersect_right_spheres(g, spheres, a.grid)
                                    : intersect_left_spheres(g, spheres, a.grid);
  }

  if (csv(c)) {
    const int m = static_cast<int>(centers.front().size());
    auto header = numbered("x", m);
    for (auto& h : numbered("residual", static_cast<int>(centers.size()))) header.push_back(h);
    CsvTable t(header);
    for (std::size_t k = 0; k < res.points.size(); ++k) {
      std::vector<double> row(res.points[k].begin(), res.points[k].end());
      row.insert(row.end(), res.residuals[k].begin(), res.residuals[k].end());
      t.row(row);
    }
    out << t.str();
  } else {
    std::vector<Vector> residuals;
    for (const auto& r : res.residuals) {
      residuals.emplace_back(Eigen::Map<const Vector>(r.data(), static_cast<Eigen::Index>(r.size())));
    }
    out << JsonObject()
               .add("points", res.points)
               .add("residuals", residuals)
               .add("enumerable", res.enumerable)
               .add("consistent", res.consistent)
               .str()
        << '\n';
  }
  return kOk;
}

// -- cccp-trace ------------------------------------------------------------------

int run_cccp(const Common& c, const std::string& mode, bool no_accel, std::ostream& out, std::ostream& err) {
  const WeightedParamSet set = read_set(c, err);
  const LegendreGenerator g = make_generator(c, set.dim());
  CccpConfig cfg;
  cfg.epsilon = c.epsilon;
  cfg.max_rounds = c.max_iter;
  if (c.tol) cfg.convergence_tol = *c.tol;
  cfg.accelerate = !no_accel;
  if (mode == "primal") {
    cfg.mode = CccpMode::primal;
  } else if (mode == "dual") {
    cfg.mode = CccpMode::dual;
  } else if (mode == "mixed") {
    cfg.mode = CccpMode::mixed;
  } else {
    throw ValidationError("--mode must be primal, dual or mixed");
  }
  const CccpResult r = cccp_symmetrized_centroid(g, set, cfg);

  if (csv(c)) {
    auto header = std::vector<std::string>{"round"};
    for (auto& h : numbered("theta", set.dim())) header.push_back(h);
    header.push_back("objective");
    CsvTable t(header);
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
      std::vector<double> row{static_cast<double>(k)};
      row.insert(row.end(), r.trace[k].begin(), r.trace[k].end());
      row.push_back(r.objectives[k]);
      t.row(row);
    }
    out << t.str();
  } else {
    std::string trace = "[";
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
      if (k) trace += ", ";
      trace += JsonObject()
                   .add("round", static_cast<int>(k))
                   .add("theta", r.trace[k])
                   .add("objective", r.objectives[k])
                   .str();
    }
    trace += "]";
    out << JsonObject()
               .add("theta", r.theta)
               .add("rounds", r.rounds)
               .add("converged", r.converged)
               .add_raw("trace", trace)
               .str()
        << '\n';
  }
  if (!r.converged) {
    err << JsonObject()
               .add("error", "convergence")
               .add("message", ("cccp did not converge in " + std::to_string(r.rounds) + " rounds").c_str())
               .str()
        << '\n';
    return kNotConverged;
  }
  return kOk;
}

void error_line(std::ostream& err, const char* kind, const std::string& msg) {
  err << JsonObject().add("error", kind).add("message", msg.c_str()).str() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bregman divergence toolkit", "bregman-cli"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--generator", c.generator,
                 "quadratic, extended-kl, burg, shannon, logdet, gaussian or alpha");
  app.add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", c.tol);
  app.add_option("--seed", c.seed);
  app.add_option("--alpha", c.alpha);
  app.add_option("--epsilon", c.epsilon);
  app.add_option("--max-iter", c.max_iter)->check(CLI::PositiveNumber);
  app.add_option("--points", c.points, "file, or inline list: ';' between points, ',' between coordinates");
  app.add_option("--weights", c.weights, "comma-separated positive weights");

  DivArgs div;
  auto* div_cmd = app.add_subcommand("div", "evaluate a divergence")->fallthrough();
  div_cmd->add_option("--left", div.left);
  div_cmd->add_option("--right", div.right);
  div_cmd->add_option("--kind", div.kind, "bregman, symmetrized, jensen, skew-jensen, awq or alpha");
  div_cmd->add_option("--skew", div.skew);
  div_cmd->add_option("--awq-alpha", div.awq_alpha);
  div_cmd->add_option("--awq-beta", div.awq_beta);

  std::string centroid_kind = "right";
  auto* centroid_cmd = app.add_subcommand("centroid", "compute a centroid")->fallthrough();
  centroid_cmd->add_option("--kind", centroid_kind,
                           "right, left, information, cosh, jeffreys, jeffreys-categorical or logdet");

  ProjectArgs proj;
  auto* project_cmd = app.add_subcommand("project", "project onto a circle or ellipse")->fallthrough();
  project_cmd->add_option("--model", proj.model);
  project_cmd->add_option("--radius", proj.radius);
  project_cmd->add_option("--axes", proj.axes);
  project_cmd->add_option("--center", proj.center);
  project_cmd->add_option("--target", proj.target);
  project_cmd->add_option("--init", proj.init);
  project_cmd->add_option("--starts", proj.starts)->check(CLI::NonNegativeNumber);

  SphereArgs sph;
  auto* sphere_cmd = app.add_subcommand("sphere-intersect", "intersect Bregman or alpha spheres")->fallthrough();
  sphere_cmd->add_option("--centers", sph.centers);
  sphere_cmd->add_option("--radii", sph.radii);
  sphere_cmd->add_option("--side", sph.side);
  sphere_cmd->add_flag("--simplex", sph.simplex);
  sphere_cmd->add_option("--grid", sph.grid)->check(CLI::PositiveNumber);

  std::string cccp_mode = "primal";
  bool no_accel = false;
  auto* cccp_cmd = app.add_subcommand("cccp-trace", "CCCP iterates for a symmetrized centroid")->fallthrough();
  cccp_cmd->add_option("--mode", cccp_mode, "primal, dual or mixed");
  cccp_cmd->add_flag("--no-accelerate", no_accel);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return kInvalid;
  }

  try {
    if (div_cmd->parsed()) return run_div(c, div, out);
    if (centroid_cmd->parsed()) return run_centroid(c, centroid_kind, out, err);
    if (project_cmd->parsed()) return run_project(c, proj, out, err);
    if (sphere_cmd->parsed()) return run_spheres(c, sph, out);
    if (cccp_cmd->parsed()) return run_cccp(c, cccp_mode, no_accel, out, err);
  } catch (const ConvergenceError& e) {
    error_line(err, "convergence", e.what());
    return kNotConverged;
  } catch (const DomainError& e) {
    error_line(err, "domain", e.what());
    return kInvalid;
  } catch (const AmbiguityError& e) {
    error_line(err, "ambiguous", e.what());
    return kInvalid;
  } catch (const ValidationError& e) {
    error_line(err, "validation", e.what());
    return kInvalid;
  } catch (const Error& e) {
    error_line(err, "error", e.what());
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace bregman::cli
