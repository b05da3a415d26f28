#include "bregman/centroids.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "detail.hpp"

namespace bregman {

// ---------------------------------------------------------------------------
// WeightedParamSet

WeightedParamSet::WeightedParamSet(std::vector<Vector> points, Vector weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw ValidationError("weighted set: at least one point required");
  if (weights_.size() != static_cast<Eigen::Index>(points_.size())) {
    throw ValidationError("weighted set: " + std::to_string(points_.size()) + " points but " +
                          std::to_string(weights_.size()) + " weights");
  }
  const Eigen::Index m = points_.front().size();
  if (m == 0) throw ValidationError("weighted set: points must be non-empty");
  for (const Vector& p : points_) {
    if (p.size() != m) throw ValidationError("weighted set: points have different dimensions");
    require_finite(p, "weighted set point");
  }
  require_finite(weights_, "weighted set weights");
  if (!(weights_.array() > 0.0).all()) throw ValidationError("weighted set: weights must be positive");
  if (std::abs(weights_.sum() - 1.0) > 1e-12) {
    throw ValidationError("weighted set: weights must sum to 1");
  }
}

WeightedParamSet WeightedParamSet::uniform(std::vector<Vector> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n == 0) throw ValidationError("weighted set: at least one point required");
  return WeightedParamSet(std::move(points), Vector::Constant(n, 1.0 / static_cast<double>(n)));
}

WeightedParamSet WeightedParamSet::normalized(std::vector<Vector> points, const Vector& raw) {
  require_finite(raw, "weighted set weights");
  if (raw.size() == 0 || !(raw.array() > 0.0).all()) {
    throw ValidationError("weighted set: weights must be positive");
  }
  return WeightedParamSet(std::move(points), raw / raw.sum());
}

WeightedParamSet WeightedParamSet::scalars(const std::vector<double>& values, const Vector& raw) {
  std::vector<Vector> pts;
  pts.reserve(values.size());
  for (double v : values) pts.push_back(Vector::Constant(1, v));
  return normalized(std::move(pts), raw);
}

WeightedParamSet WeightedParamSet::map(const VectorFn& f) const {
  std::vector<Vector> out;
  out.reserve(points_.size());
  for (const Vector& p : points_) out.push_back(f(p));
  return WeightedParamSet(std::move(out), weights_);
}

// ---------------------------------------------------------------------------
// Sided centroids and information

Vector right_centroid(const WeightedParamSet& set) {
  Vector c = Vector::Zero(set.dim());
  for (int i = 0; i < set.size(); ++i) c += set.weight(i) * set.point(i);
  return c;
}

namespace {

void check_generator_dim(const LegendreGenerator& g, const WeightedParamSet& set) {
  if (g.dim() != set.dim()) {
    throw ValidationError("generator '" + g.name() + "' has dimension " + std::to_string(g.dim()) +
                          " but points have dimension " + std::to_string(set.dim()));
  }
}

}  // namespace

Vector left_centroid(const LegendreGenerator& g, const WeightedParamSet& set) {
  check_generator_dim(g, set);
  Vector eta = Vector::Zero(set.dim());
  for (int i = 0; i < set.size(); ++i) eta += set.weight(i) * g.grad(set.point(i));
  if (!g.dual_contains(eta)) throw DomainError("left centroid: dual mean outside the dual domain");
  return g.grad_inv(eta);
}

Vector generalized_left_centroid(const std::vector<LegendreGenerator>& gens,
                                 const WeightedParamSet& set, const NewtonOptions& opts) {
  if (static_cast<int>(gens.size()) != set.size()) {
    throw ValidationError("generalized left centroid: one generator per point required");
  }
  const int m = set.dim();
  Vector target = Vector::Zero(m);
  for (int i = 0; i < set.size(); ++i) {
    check_generator_dim(gens[i], set);
    target += set.weight(i) * gens[i].grad(set.point(i));
  }
  const Vector& w = set.weights();
  auto in_domain = [&](const Vector& t) {
    for (const auto& g : gens) {
      if (!g.contains(t)) return false;
    }
    return true;
  };
  auto value = [&](const Vector& t) {
    double s = -t.dot(target);
    for (int i = 0; i < set.size(); ++i) s += w[i] * gens[i].value(t);
    return s;
  };
  auto grad = [&](const Vector& t) -> Vector {
    Vector s = -target;
    for (int i = 0; i < set.size(); ++i) s += w[i] * gens[i].grad(t);
    return s;
  };
  auto hess = [&](const Vector& t) -> Matrix {
    Matrix h = Matrix::Zero(m, m);
    for (int i = 0; i < set.size(); ++i) h += w[i] * gens[i].hessian(t);
    return h;
  };
  const Vector start = right_centroid(set);
  if (!in_domain(start)) {
    throw DomainError("generalized left centroid: arithmetic mean outside a generator domain");
  }
  return minimize_convex_newton(value, grad, hess, in_domain, start, opts);
}

double bregman_information(const LegendreGenerator& g, const WeightedParamSet& set) {
  check_generator_dim(g, set);
  const Vector c = right_centroid(set);
  double s = 0.0;
  for (int i = 0; i < set.size(); ++i) s += set.weight(i) * bregman(g, set.point(i), c);
  return s;
}

double jensen_diversity(const LegendreGenerator& g, const WeightedParamSet& set) {
  check_generator_dim(g, set);
  double s = -g.value(right_centroid(set));
  for (int i = 0; i < set.size(); ++i) s += set.weight(i) * g.value(set.point(i));
  return std::max(0.0, s);
}

BiasVariance bias_variance(const LegendreGenerator& g, const WeightedParamSet& set,
                           const Vector& theta) {
  return {bregman_information(g, set), bregman(g, right_centroid(set), theta)};
}

double projection_gap(const LegendreGenerator& g, const WeightedParamSet& set, const Vector& theta) {
  check_generator_dim(g, set);
  double s = -bregman(g, right_centroid(set), theta);
  for (int i = 0; i < set.size(); ++i) s += set.weight(i) * bregman(g, set.point(i), theta);
  return s;
}

// ---------------------------------------------------------------------------
// Curved projections

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CurvedObjective {
  const LegendreGenerator& g;
  const CurvedModel& model;
  const Vector& target;

  double operator()(const Vector& u) const {
    if (!model.contains(u)) return kInf;
    const Vector t = model.embed(u);
    if (!g.contains(t)) return kInf;
    return bregman(g, target, t);
  }

  // Central differences; one-sided next to the domain boundary.
  Vector gradient(const Vector& u) const {
    Vector grad(u.size());
    Vector probe = u;
    const double f0 = (*this)(u);
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      const double h = 5e-6 * (1.0 + std::abs(u[i]));
      probe[i] = u[i] + h;
      const double fp = (*this)(probe);
      probe[i] = u[i] - h;
      const double fm = (*this)(probe);
      probe[i] = u[i];
      if (std::isfinite(fp) && std::isfinite(fm)) {
        grad[i] = (fp - fm) / (2.0 * h);
      } else if (std::isfinite(fp)) {
        grad[i] = (fp - f0) / h;
      } else if (std::isfinite(fm)) {
        grad[i] = (f0 - fm) / h;
      } else {
        grad[i] = std::numeric_limits<double>::quiet_NaN();
      }
    }
    return grad;
  }
};

struct Descent {
  Vector u;
  double value;
};

// Gradient descent with Barzilai-Borwein steps and Armijo backtracking,
// followed by gradient-only steps that drive the gradient to its noise floor.
Descent descend(const CurvedObjective& obj, Vector u, const CurvedSearchOptions& opts) {
  double fu = obj(u);
  Vector grad = obj.gradient(u);
  if (!grad.allFinite()) return {u, fu};
  double step = 1.0 / std::max(1.0, grad.norm());

  for (int it = 0; it < opts.max_iter; ++it) {
    const double gn2 = grad.squaredNorm();
    if (std::sqrt(gn2) <= opts.grad_tol * (1.0 + std::abs(fu))) break;
    double t = step;
    bool accepted = false;
    Vector next;
    double fnext = kInf;
    for (int bt = 0; bt < 60; ++bt, t *= 0.5) {
      next = u - t * grad;
      fnext = obj(next);
      if (fnext <= fu - 1e-4 * t * gn2) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    const Vector gnext = obj.gradient(next);
    if (!gnext.allFinite()) {
      u = next;
      fu = fnext;
      break;
    }
    const Vector s = next - u;
    const Vector y = gnext - grad;
    const double sy = s.dot(y);
    step = sy > 0.0 ? std::clamp(s.squaredNorm() / sy, 1e-12, 1e6) : std::min(2.0 * t, 1e6);
    u = next;
    fu = fnext;
    grad = gnext;
  }

  // Polish: accept steps as long as the gradient norm keeps shrinking.
  for (int it = 0; it < 100 && grad.allFinite(); ++it) {
    const Vector next = u - step * grad;
    const double fnext = obj(next);
    if (!std::isfinite(fnext)) break;
    const Vector gnext = obj.gradient(next);
    if (!gnext.allFinite() || gnext.norm() >= grad.norm()) break;
    const Vector s = next - u;
    const double sy = s.dot(gnext - grad);
    if (sy > 0.0) step = std::clamp(s.squaredNorm() / sy, 1e-12, 1e6);
    u = next;
    fu = fnext;
    grad = gnext;
  }
  return {u, fu};
}

bool is_flat(const CurvedObjective& obj, const Vector& center, const CurvedSearchOptions& opts) {
  int valid = 0;
  const double half = std::numbers::pi * opts.perturbation_scale;
  for (Eigen::Index axis = 0; axis < center.size(); ++axis) {
    for (int j = 0; j < opts.flat_samples; ++j) {
      Vector u = center;
      u[axis] += -half + 2.0 * half * j / opts.flat_samples;
      if (!std::isfinite(obj(u))) continue;
      const Vector grad = obj.gradient(u);
      if (!grad.allFinite()) continue;
      if (grad.norm() >= opts.flat_tol) return false;
      ++valid;
    }
  }
  return valid >= 2;
}

}  // namespace

Vector curved_projection(const LegendreGenerator& g, const CurvedModel& model, const Vector& target,
                         const Vector& init, const CurvedSearchOptions& opts) {
  if (target.size() != g.dim() || model.theta_dim != g.dim()) {
    throw ValidationError("curved projection: model, target and generator dimensions differ");
  }
  if (!g.closure_contains(target)) throw DomainError("curved projection: target outside domain");
  if (init.size() != model.u_dim) throw ValidationError("curved projection: init has wrong dimension");
  if (!model.contains(init) || !g.contains(model.embed(init))) {
    throw DomainError("curved projection: init outside the model domain");
  }
  if (opts.perturbations < 0 || opts.max_iter < 1 || opts.flat_samples < 1) {
    throw ValidationError("curved projection: invalid search options");
  }

  const CurvedObjective obj{g, model, target};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-std::numbers::pi, std::numbers::pi);

  std::vector<Vector> starts{init};
  for (int k = 0; k < opts.perturbations; ++k) {
    Vector u = init;
    for (Eigen::Index i = 0; i < u.size(); ++i) u[i] += opts.perturbation_scale * unit(rng);
    starts.push_back(u);
  }

  Descent best{init, kInf};
  for (const Vector& s : starts) {
    if (!std::isfinite(obj(s))) continue;
    const Descent d = descend(obj, s, opts);
    if (d.value < best.value) best = d;
  }
  if (!std::isfinite(best.value)) {
    throw ConvergenceError("curved projection: no start produced a finite objective", init);
  }
  if (is_flat(obj, best.u, opts)) {
    throw AmbiguityError("curved projection is not unique: the objective is flat around the minimizer");
  }
  const Vector grad = obj.gradient(best.u);
  if (!(grad.norm() <= 1e-6 * (1.0 + std::abs(best.value)))) {
    throw ConvergenceError("curved projection: gradient did not vanish", best.u);
  }
  return best.u;
}

Vector curved_centroid(const LegendreGenerator& g, const CurvedModel& model,
                       const WeightedParamSet& set, const Vector& init,
                       const CurvedSearchOptions& opts) {
  if (set.dim() != model.u_dim) {
    throw ValidationError("curved centroid: points must be model parameters");
  }
  const WeightedParamSet thetas = set.map([&](const Vector& u) { return model.theta(u); });
  return curved_projection(g, model, right_centroid(thetas), init, opts);
}

Vector pointwise_curved_centroid(const LegendreGenerator& f, const Vector& w,
                                 const std::vector<DiscreteDensity>& densities,
                                 const Vector& weights, const CurvedModel& family,
                                 const Vector& init, const CurvedSearchOptions& opts) {
  if (f.dim() != 1) throw ValidationError("pointwise centroid: scalar generator required");
  if (densities.empty()) throw ValidationError("pointwise centroid: no densities");
  const int n = densities.front().size();
  const Vector& mu = densities.front().measure;
  std::vector<Vector> values;
  for (const auto& d : densities) {
    if (d.size() != n || d.measure != mu) throw ValidationError("pointwise centroid: grid mismatch");
    values.push_back(d.values);
  }
  if (w.size() != n) throw ValidationError("pointwise centroid: weight function has wrong length");
  if (family.theta_dim != n) throw ValidationError("pointwise centroid: family grid size mismatch");
  const WeightedParamSet set(values, weights);
  const LegendreGenerator g = make_weighted_separable(f, w.cwiseProduct(mu));
  return curved_projection(g, family, right_centroid(set), init, opts);
}

// ---------------------------------------------------------------------------
// Symmetrized centroids with closed forms

double jeffreys_objective(const WeightedParamSet& set, const Vector& theta) {
  if (theta.size() != set.dim()) throw ValidationError("jeffreys objective: dimension mismatch");
  if (!(theta.array() > 0.0).all()) throw DomainError("jeffreys objective: theta must be positive");
  double s = 0.0;
  for (int i = 0; i < set.size(); ++i) {
    const Vector& p = set.point(i);
    s += set.weight(i) * ((theta - p).array() * (theta.array().log() - p.array().log())).sum();
  }
  return s;
}

namespace {

void require_positive_points(const WeightedParamSet& set, const char* what) {
  for (const Vector& p : set.points()) {
    if (!(p.array() > 0.0).all()) throw DomainError(std::string(what) + ": points must be positive");
  }
}

}  // namespace

double jeffreys_centroid_1d(const WeightedParamSet& set) {
  if (set.dim() != 1) throw ValidationError("jeffreys_centroid_1d: scalar points required");
  require_positive_points(set, "jeffreys_centroid_1d");
  double a = 0.0;
  double log_g = 0.0;
  for (int i = 0; i < set.size(); ++i) {
    a += set.weight(i) * set.point(i)[0];
    log_g += set.weight(i) * std::log(set.point(i)[0]);
  }
  // a / W(a e / g) with the argument formed in log space to avoid overflow.
  return a / lambert_w0(std::exp(std::log(a) + 1.0 - log_g));
}

Vector jeffreys_centroid_categorical(const WeightedParamSet& set) {
  const int m = set.dim();
  if (m < 2) throw ValidationError("categorical Jeffreys centroid: at least two bins required");
  require_positive_points(set, "categorical Jeffreys centroid");
  for (const Vector& p : set.points()) {
    if (std::abs(p.sum() - 1.0) > 1e-9) {
      throw DomainError("categorical Jeffreys centroid: points must sum to 1");
    }
  }
  Vector a = Vector::Zero(m);
  Vector log_g = Vector::Zero(m);
  for (int i = 0; i < set.size(); ++i) {
    a += set.weight(i) * set.point(i);
    log_g += set.weight(i) * set.point(i).array().log().matrix();
  }
  const Vector g = log_g.array().exp();
  const Vector log_ratio = a.array().log() - (g / g.sum()).array().log();

  auto theta_at = [&](double lambda) -> Vector {
    Vector t(m);
    for (int j = 0; j < m; ++j) t[j] = a[j] / lambert_w0(std::exp(log_ratio[j] + 1.0 + lambda));
    return t;
  };
  auto excess = [&](double lambda) { return theta_at(lambda).sum() - 1.0; };

  // excess() decreases in lambda: positive as lambda -> -inf, -1 as lambda -> +inf.
  double lo = 0.0;
  double hi = 0.0;
  if (excess(0.0) > 0.0) {
    hi = 1.0;
    while (excess(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e6) throw ConvergenceError("categorical Jeffreys centroid: bracketing failed", a);
    }
  } else {
    lo = -1.0;
    while (excess(lo) < 0.0) {
      hi = lo;
      lo *= 2.0;
      if (lo < -1e6) throw ConvergenceError("categorical Jeffreys centroid: bracketing failed", a);
    }
  }
  const double lambda = find_root_1d(excess, lo, hi, 1e-15, 400);
  const Vector t = theta_at(lambda);
  return t / t.sum();
}

double cosh_centroid(const WeightedParamSet& set) {
  if (set.dim() != 1) throw ValidationError("cosh_centroid: scalar points required");
  require_positive_points(set, "cosh_centroid");
  double a = 0.0;
  double inv_h = 0.0;
  for (int i = 0; i < set.size(); ++i) {
    a += set.weight(i) * set.point(i)[0];
    inv_h += set.weight(i) / set.point(i)[0];
  }
  return std::sqrt(a / inv_h);
}

namespace {

void check_matrix_set(const std::vector<SpdMatrix>& mats, const Vector& weights) {
  if (mats.empty()) throw ValidationError("matrix mean: no matrices");
  if (weights.size() != static_cast<Eigen::Index>(mats.size())) {
    throw ValidationError("matrix mean: weight count differs from matrix count");
  }
  require_finite(weights, "matrix mean weights");
  if (!(weights.array() > 0.0).all() || std::abs(weights.sum() - 1.0) > 1e-12) {
    throw ValidationError("matrix mean: weights must be positive and sum to 1");
  }
  for (const auto& m : mats) {
    if (m.dim() != mats.front().dim()) throw ValidationError("matrix mean: dimension mismatch");
  }
}

}  // namespace

SpdMatrix matrix_arithmetic_mean(const std::vector<SpdMatrix>& mats, const Vector& weights) {
  check_matrix_set(mats, weights);
  Matrix s = Matrix::Zero(mats.front().dim(), mats.front().dim());
  for (std::size_t i = 0; i < mats.size(); ++i) s += weights[static_cast<Eigen::Index>(i)] * mats[i].matrix();
  return SpdMatrix(s);
}

SpdMatrix matrix_harmonic_mean(const std::vector<SpdMatrix>& mats, const Vector& weights) {
  check_matrix_set(mats, weights);
  Matrix s = Matrix::Zero(mats.front().dim(), mats.front().dim());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    s += weights[static_cast<Eigen::Index>(i)] * mats[i].inverse().matrix();
  }
  return SpdMatrix(s, 1e-8).inverse();
}

SpdMatrix logdet_cosh_centroid(const std::vector<SpdMatrix>& mats, const Vector& weights) {
  const SpdMatrix a = matrix_arithmetic_mean(mats, weights);
  const SpdMatrix h = matrix_harmonic_mean(mats, weights);
  const SpdMatrix h_half = spd_sqrt(h);
  const SpdMatrix h_inv_half = spd_inv_sqrt(h);
  const Matrix inner = h_inv_half.matrix() * a.matrix() * h_inv_half.matrix();
  const Matrix c = h_half.matrix() * spd_sqrt(SpdMatrix(inner, 1e-8)).matrix() * h_half.matrix();
  return SpdMatrix(c, 1e-8);
}

double logdet_cosh_objective(const std::vector<SpdMatrix>& mats, const Vector& weights,
                             const Matrix& c) {
  check_matrix_set(mats, weights);
  const int d = mats.front().dim();
  if (c.rows() != d || c.cols() != d) throw ValidationError("logdet objective: dimension mismatch");
  const Matrix c_inv = detail::spd_inverse(c);
  double s = 0.0;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Matrix& m = mats[i].matrix();
    s += weights[static_cast<Eigen::Index>(i)] *
         ((c * mats[i].inverse().matrix()).trace() + (m * c_inv).trace() - 2.0 * d);
  }
  return s;
}

}  // namespace bregman
