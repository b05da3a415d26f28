// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "bregman/bregman.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace bregman;
namespace ts = testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Vector scalar(double x) { return Vector::Constant(1, x); }

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

// 1
Outcome cosine_dissimilarity() {
  const auto g = make_quadratic(SpdMatrix::identity(2));
  const auto circle = make_circle_model();
  ts::Rng rng(101);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u1 = rng.uniform(0, 2 * std::numbers::pi);
    const double u2 = rng.uniform(0, 2 * std::numbers::pi);
    const double err = std::abs(curved_divergence(g, circle, scalar(u1), scalar(u2)) - (1 - std::cos(u1 - u2)));
    worst = std::max(worst, err);
  }
  return {worst < 1e-12, fmt("max err %.2e over 10000 pairs", worst)};
}

// 2
Outcome cosh_centroid_pair() {
  const auto set = WeightedParamSet::uniform({scalar(1), scalar(2)});
  const auto burg = make_burg(1);
  const double c = cosh_centroid(set);
  const double e1 = std::abs(c - std::numbers::sqrt2);
  const double right = right_centroid(set)[0];
  const double left = left_centroid(burg, set)[0];
  const double e2 = std::abs(right - 1.5) + std::abs(left - 4.0 / 3.0);
  const double e3 = std::abs(bregman::bregman(burg, scalar(1.5), scalar(c)) -
                             bregman::bregman(burg, scalar(c), scalar(4.0 / 3.0)));
  Outcome o{e1 < 1e-12 && e2 < 1e-12 && e3 < 1e-12, ""};
  o.detail = fmt("|c - sqrt2| %.2e", e1) + fmt(", sided centroids err %.2e", e2) + fmt(", bisector err %.2e", e3);
  return o;
}

// 3
Outcome jeffreys_1d() {
  ts::Rng rng(103);
  double worst_res = 0.0, worst_rel = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = rng.integer(1, 6);
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(std::exp(rng.uniform(-3, 3)));
    const Vector w = rng.uniform_vector(n, 0.1, 1.0);
    const auto set = WeightedParamSet::scalars(xs, w);
    const Vector& wn = set.weights();
    const double t = jeffreys_centroid_1d(set);
    // d/dt sum w_i (x_i - t)(log x_i - log t), written out term by term.
    auto deriv = [&](double th) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += wn[i] * (std::log(th) - std::log(xs[i]) - xs[i] / th + 1.0);
      return s;
    };
    worst_res = std::max(worst_res, std::abs(deriv(t)));
    // Numeric minimizer: bisection on a central-difference derivative of the objective.
    auto obj = [&](double th) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += wn[i] * (xs[i] - th) * std::log(xs[i] / th);
      return s;
    };
    auto fd = [&](double th) {
      const double h = 1e-5 * th;
      return (obj(th + h) - obj(th - h)) / (2 * h);
    };
    const double lo = *std::min_element(xs.begin(), xs.end());
    const double hi = *std::max_element(xs.begin(), xs.end());
    const double ref = lo == hi ? lo : ts::bisect(fd, lo * (1 - 1e-9), hi * (1 + 1e-9));
    worst_rel = std::max(worst_rel, std::abs(t - ref) / ref);
  }
  return {worst_res < 1e-10 && worst_rel < 1e-8,
          fmt("max derivative residual %.2e", worst_res) + fmt(", max rel diff to numeric min %.2e", worst_rel)};
}

// 4
Vector cccp_categorical(const WeightedParamSet& set, int m, double eps) {
  const auto reduced = set.map([m](const Vector& p) { return Vector(p.head(m - 1)); });
  CccpConfig cfg;
  cfg.epsilon = eps;
  const CccpResult r = cccp_symmetrized_centroid(make_shannon_simplex(m), reduced, cfg);
  Vector full(m);
  full << r.theta, 1.0 - r.theta.sum();
  return full;
}

// The CCCP objective differs from the Jeffreys objective by a term of order
// eps times the curvature 1/p, so its minimizer drifts from the closed form as
// bins approach zero. The 1e-4 bound is checked on sets with every bin >= 0.02;
// on unrestricted sets the drift is reported and must shrink tenfold with eps.
Outcome jeffreys_categorical() {
  ts::Rng rng(104);
  double worst_sum = 0.0, worst_cccp = 0.0, worst_free = 0.0, worst_ratio = 0.0;
  int dominated = 0, over = 0, sets = 0;
  for (int m : {3, 5}) {
    for (int k = 0; k < 50; ++k) {
      const int n = rng.integer(2, 5);
      std::vector<Vector> pts;
      for (int i = 0; i < n; ++i) pts.push_back(rng.simplex(m));
      const auto set = WeightedParamSet::normalized(pts, rng.uniform_vector(n, 0.1, 1.0));
      const Vector c = jeffreys_centroid_categorical(set);
      worst_sum = std::max(worst_sum, std::abs(c.sum() - 1.0));
      const double oc = jeffreys_objective(set, c);
      const double slack = 1e-14 * (1 + oc);
      for (int s = 0; s < 1000; ++s) {
        if (jeffreys_objective(set, rng.simplex(m)) < oc - slack) ++dominated;
      }
      const Vector a = right_centroid(set);
      Vector lg = Vector::Zero(m);
      for (int i = 0; i < n; ++i) lg += set.weight(i) * pts[static_cast<std::size_t>(i)].array().log().matrix();
      const Vector gnorm = lg.array().exp().matrix() / lg.array().exp().sum();
      if (jeffreys_objective(set, a) < oc - slack) ++dominated;
      if (jeffreys_objective(set, gnorm) < oc - slack) ++dominated;

      ++sets;
      const double rel = (cccp_categorical(set, m, 1e-4) - c).norm() / c.norm();
      worst_free = std::max(worst_free, rel);
      if (rel > 1e-4) {
        ++over;
        const double rel5 = (cccp_categorical(set, m, 1e-5) - c).norm() / c.norm();
        worst_ratio = std::max(worst_ratio, rel5 / rel);
      }
    }
    for (int k = 0; k < 50; ++k) {
      const int n = rng.integer(2, 5);
      std::vector<Vector> pts;
      while (static_cast<int>(pts.size()) < n) {
        Vector p = rng.simplex(m);
        if (p.minCoeff() >= 0.02) pts.push_back(std::move(p));
      }
      const auto set = WeightedParamSet::normalized(pts, rng.uniform_vector(n, 0.1, 1.0));
      const Vector c = jeffreys_centroid_categorical(set);
      worst_cccp = std::max(worst_cccp, (cccp_categorical(set, m, 1e-4) - c).norm() / c.norm());
    }
  }
  return {worst_sum < 1e-12 && dominated == 0 && worst_cccp < 1e-4 && worst_ratio < 0.2,
          fmt("max |sum-1| %.2e", worst_sum) + fmt(", dominated samples %.0f", dominated) +
              fmt(", CCCP rel diff %.2e (bins >= 0.02)", worst_cccp) +
              fmt("; unrestricted: %.0f", over) + fmt("/%.0f above 1e-4", sets) +
              fmt(", max %.2e", worst_free) + fmt(", eps/10 shrinks it to <= %.2f x", worst_ratio)};
}

// 5
Outcome logdet_cosh() {
  ts::Rng rng(105);
  double worst_grad = 0.0, worst_order = 1e300, worst_scalar = 0.0;
  for (int d : {2, 3}) {
    for (int k = 0; k < 50; ++k) {
      const int n = rng.integer(2, 4);
      std::vector<SpdMatrix> mats;
      for (int i = 0; i < n; ++i) mats.emplace_back(rng.spd(d));
      Vector w = rng.uniform_vector(n, 0.1, 1.0);
      w /= w.sum();
      const Matrix c = logdet_cosh_centroid(mats, w).matrix();
      auto obj = [&](const Vector& p) { return logdet_cosh_objective(mats, w, unpack_symmetric(p, d)); };
      worst_grad = std::max(worst_grad, ts::numeric_gradient(obj, pack_symmetric(c), 1e-6).norm());
      Matrix a = Matrix::Zero(d, d), hinv = Matrix::Zero(d, d);
      for (int i = 0; i < n; ++i) {
        a += w[i] * mats[static_cast<std::size_t>(i)].matrix();
        hinv += w[i] * mats[static_cast<std::size_t>(i)].matrix().inverse();
      }
      const Matrix h = hinv.inverse();
      worst_order = std::min({worst_order, min_eigenvalue(a - c), min_eigenvalue(c - h)});
    }
  }
  for (int k = 0; k < 50; ++k) {
    const int n = rng.integer(1, 5);
    std::vector<SpdMatrix> mats;
    Vector w = rng.uniform_vector(n, 0.1, 1.0);
    w /= w.sum();
    double a = 0, hinv = 0;
    for (int i = 0; i < n; ++i) {
      const double x = std::exp(rng.uniform(-2, 2));
      mats.emplace_back(Matrix::Constant(1, 1, x));
      a += w[i] * x;
      hinv += w[i] / x;
    }
    const double c = logdet_cosh_centroid(mats, w).matrix()(0, 0);
    worst_scalar = std::max(worst_scalar, std::abs(c - std::sqrt(a / hinv)) / c);
  }
  return {worst_grad < 1e-6 && worst_scalar < 1e-12 && worst_order >= -1e-9,
          fmt("max stationarity residual %.2e", worst_grad) + fmt(", scalar rel err %.2e", worst_scalar) +
              fmt(", min Loewner eigenvalue %.2e", worst_order)};
}

// 6
Outcome curved_projection_gap() {
  ts::Rng rng(106);
  struct Case {
    LegendreGenerator g;
    CurvedModel model;
  };
  const std::vector<Case> cases{
      {make_quadratic(SpdMatrix::identity(2)), make_circle_model()},
      {make_quadratic(SpdMatrix::identity(2)), make_ellipse_model(2.0, 0.5)},
      {make_extended_kl(2), make_circle_model(1.0, vec({2, 2}))},
      {make_extended_kl(2), make_ellipse_model(1.5, 0.7, vec({2, 2}))},
  };
  double worst_var = 0.0, worst_info = 0.0;
  for (const auto& cs : cases) {
    for (int rep = 0; rep < 5; ++rep) {
      const int n = rng.integer(2, 5);
      std::vector<Vector> pts;
      for (int i = 0; i < n; ++i) pts.push_back(cs.model.theta(scalar(rng.uniform(0, 2 * std::numbers::pi))));
      const auto set = WeightedParamSet::normalized(pts, rng.uniform_vector(n, 0.1, 1.0));
      const Vector mean = right_centroid(set);
      double info = 0.0;
      for (int i = 0; i < n; ++i) info += set.weight(i) * bregman::bregman(cs.g, set.point(i), mean);
      double lo = 1e300, hi = -1e300;
      for (int s = 0; s < 50; ++s) {
        const Vector t = cs.model.theta(scalar(rng.uniform(0, 2 * std::numbers::pi)));
        double gap = -bregman::bregman(cs.g, mean, t);
        for (int i = 0; i < n; ++i) gap += set.weight(i) * bregman::bregman(cs.g, set.point(i), t);
        lo = std::min(lo, gap);
        hi = std::max(hi, gap);
        worst_info = std::max(worst_info, std::abs(gap - info));
      }
      worst_var = std::max(worst_var, hi - lo);
    }
  }
  const auto g = make_quadratic(SpdMatrix::identity(2));
  const auto circle = make_circle_model();
  const Vector u = curved_centroid(g, circle, WeightedParamSet::uniform({scalar(0), scalar(std::numbers::pi / 2)}),
                                   scalar(0.0));
  const double eq = std::abs(u[0] - std::numbers::pi / 4);
  bool ambiguous = false;
  try {
    curved_centroid(g, circle, WeightedParamSet::uniform({scalar(0), scalar(std::numbers::pi)}), scalar(0.3));
  } catch (const AmbiguityError&) {
    ambiguous = true;
  }
  return {worst_var < 1e-10 && worst_info < 1e-10 && eq < 1e-8 && ambiguous,
          fmt("gap variation %.2e", worst_var) + fmt(", gap vs information %.2e", worst_info) +
              fmt(", |u* - pi/4| %.2e", eq) + (ambiguous ? ", {0,pi} ambiguous" : ", {0,pi} NOT flagged")};
}

// 7
Outcome bias_variance_identity() {
  ts::Rng rng(107);
  using Sampler = std::function<Vector()>;
  struct Case {
    LegendreGenerator g;
    Sampler sample;
  };
  const SpdMatrix q(rng.spd(3));
  const AlphaRepresentation rep(0.5);
  const auto burg2 = make_burg(2);
  const std::vector<Case> cases{
      {make_quadratic(q), [&] { return rng.uniform_vector(3, -2, 2); }},
      {make_extended_kl(3), [&] { return rng.uniform_vector(3, 0.1, 4); }},
      {make_burg(3), [&] { return rng.uniform_vector(3, 0.1, 4); }},
      {make_logdet(2), [&] { return pack_symmetric(rng.spd(2)); }},
      {make_shannon_simplex(4), [&] { return Vector(rng.simplex(4).head(3)); }},
      {make_gaussian_cumulant(2),
       [&] { return gaussian_natural(rng.uniform_vector(2, -1, 1), SpdMatrix(rng.spd(2))); }},
      {make_alpha_generator(0.5, 3), [&] { return rep.forward(rng.uniform_vector(3, 0.1, 4)); }},
      {make_awq_lifted(burg2, 0.5, 3.0),
       [&] {
         Vector x(4);
         x << rng.uniform_vector(2, 0.2, 3), rng.uniform_vector(2, -3, -0.2);
         return x;
       }},
  };
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto& cs = cases[static_cast<std::size_t>(k) % cases.size()];
    const int n = rng.integer(1, 6);
    std::vector<Vector> pts;
    for (int i = 0; i < n; ++i) pts.push_back(cs.sample());
    const auto set = WeightedParamSet::normalized(pts, rng.uniform_vector(n, 0.1, 1.0));
    const Vector theta = cs.sample();
    double direct = 0.0;
    for (int i = 0; i < n; ++i) direct += set.weight(i) * bregman::bregman(cs.g, set.point(i), theta);
    const BiasVariance bv = bias_variance(cs.g, set, theta);
    worst = std::max(worst, std::abs(direct - bv.info - bv.bias));
  }
  return {worst < 1e-10, fmt("max residual %.2e over 100 triples, 8 generators", worst)};
}

// 8
Outcome representational_identity() {
  ts::Rng rng(108);
  double worst_b = 0.0, worst_d = 0.0, worst_lim = 0.0;
  for (double a : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
    for (int k = 0; k < 200; ++k) {
      const int m = rng.integer(1, 4);
      const Vector q1 = rng.uniform_vector(m, 0.05, 5);
      const Vector q2 = rng.uniform_vector(m, 0.05, 5);
      const double ref = ts::alpha_div_direct(a, q1, q2);
      worst_b = std::max(worst_b, std::abs(rep_bregman(a, q1, q2) - ref));
      worst_d = std::max({worst_d, std::abs(rep_bregman_dual(a, q1, q2) - ref),
                          std::abs(rep_fenchel_young(a, q1, q2) - ref)});
    }
  }
  for (int k = 0; k < 50; ++k) {
    const int m = rng.integer(1, 4);
    const Vector q1 = rng.uniform_vector(m, 0.05, 5);
    const Vector q2 = rng.uniform_vector(m, 0.05, 5);
    const double kl12 = ts::kl_plus(q1, q2);
    const double kl21 = ts::kl_plus(q2, q1);
    worst_lim = std::max({worst_lim, std::abs(rep_bregman(-1 + 1e-6, q1, q2) - kl12) / kl12,
                          std::abs(rep_bregman(1 - 1e-6, q1, q2) - kl21) / kl21,
                          std::abs(alpha_divergence(-1 + 1e-6, q1, q2) - kl12) / kl12,
                          std::abs(alpha_divergence(1 - 1e-6, q1, q2) - kl21) / kl21});
  }
  return {worst_b < 1e-9 && worst_d < 1e-9 && worst_lim < 1e-4,
          fmt("max |D - B o R| %.2e", worst_b) + fmt(", max |D - dual forms| %.2e", worst_d) +
              fmt(", max rel limit err %.2e", worst_lim)};
}

// 9
Outcome awq_metric() {
  ts::Rng rng(109);
  const auto g = make_burg(2);
  double worst = 0.0;
  for (double ab : {1.5, 2.0, 4.0}) {
    for (int k = 0; k < 200; ++k) {
      const double a = std::exp(rng.uniform(-1.5, 1.5));
      const double b = ab / a;
      const Vector t1 = rng.uniform_vector(2, 0.2, 5);
      const Vector t2 = rng.uniform_vector(2, 0.2, 5);
      const Vector d = awq_feature_map(g, a, b, t1) - awq_feature_map(g, a, b, t2);
      worst = std::max(worst, std::abs(0.5 * d.squaredNorm() - awq_divergence(g, a, b, t1, t2)));
    }
  }
  int violations = 0;
  double min_slack = 1e300;
  for (int k = 0; k < 10000; ++k) {
    const double ab = k % 4 == 0 ? 1.0 : rng.uniform(1.0, 6.0);
    const double a = std::exp(rng.uniform(-1.5, 1.5));
    const double b = ab / a;
    const Vector x = rng.uniform_vector(2, 0.2, 5);
    const Vector y = rng.uniform_vector(2, 0.2, 5);
    const Vector z = rng.uniform_vector(2, 0.2, 5);
    const double dxy = std::sqrt(awq_divergence(g, a, b, x, y));
    const double dyz = std::sqrt(awq_divergence(g, a, b, y, z));
    const double dxz = std::sqrt(awq_divergence(g, a, b, x, z));
    const double slack = dxy + dyz - dxz;
    min_slack = std::min(min_slack, slack);
    if (slack < -1e-12) ++violations;
  }
  return {worst < 1e-10 && violations == 0,
          fmt("max feature-map err %.2e", worst) + fmt(", triangle violations %.0f", violations) +
              fmt(" (min slack %.2e)", min_slack)};
}

// 10
Outcome reparameterization() {
  ts::Rng rng(110);
  using Sampler = std::function<Vector()>;
  const std::vector<std::pair<LegendreGenerator, Sampler>> gens{
      {make_burg(3), [&] { return rng.uniform_vector(3, 0.1, 4); }},
      {make_extended_kl(3), [&] { return rng.uniform_vector(3, 0.1, 4); }},
      {make_logdet(2), [&] { return pack_symmetric(rng.spd(2)); }},
      {make_gaussian_cumulant(1),
       [&] { return gaussian_natural(rng.uniform_vector(1, -1, 1), SpdMatrix(rng.spd(1))); }},
  };
  double worst_seg = 0.0;
  for (int k = 0; k < 500; ++k) {
    const auto& [g, sample] = gens[static_cast<std::size_t>(k) % gens.size()];
    const Vector t = sample();
    const Vector tp = sample();
    const auto s = restrict_to_segment(g, t, tp);
    worst_seg = std::max(worst_seg, std::abs(bregman::bregman(s.generator, scalar(0), scalar(1)) -
                                             bregman::bregman(g, t, tp)));
  }
  double worst_simplex = 0.0;
  for (int k = 2; k <= 3; ++k) {
    for (int m = 2; m <= 4; ++m) {
      const auto g = make_burg(m);
      std::vector<Vector> verts;
      for (int i = 0; i < k; ++i) verts.push_back(rng.uniform_vector(m, 0.2, 4));
      const auto sg = restrict_to_simplex(g, verts);
      for (int p = 0; p < 200; ++p) {
        const Vector l1 = rng.simplex(k).tail(k - 1);
        const Vector l2 = rng.simplex(k).tail(k - 1);
        Vector b1 = Vector::Zero(m), b2 = Vector::Zero(m);
        b1 = verts[0];
        b2 = verts[0];
        for (int i = 1; i < k; ++i) {
          b1 += l1[i - 1] * (verts[static_cast<std::size_t>(i)] - verts[0]);
          b2 += l2[i - 1] * (verts[static_cast<std::size_t>(i)] - verts[0]);
        }
        worst_simplex = std::max({worst_simplex,
                                  std::abs(bregman::bregman(sg.generator, l1, l2) - bregman::bregman(g, b1, b2)),
                                  std::abs(bregman::bregman(sg.generator, l2, l1) - bregman::bregman(g, b2, b1))});
      }
    }
  }
  return {worst_seg < 1e-10 && worst_simplex < 1e-10,
          fmt("segment max err %.2e", worst_seg) + fmt(", simplex max err %.2e", worst_simplex)};
}

// Each oracle root has exactly one match among `got` and vice versa.
bool same_point_sets(const std::vector<Vector>& got, const std::vector<Vector>& oracle, double tol) {
  if (got.size() != oracle.size()) return false;
  for (const Vector& o : oracle) {
    const auto n = std::count_if(got.begin(), got.end(), [&](const Vector& p) { return (p - o).norm() < tol; });
    if (n != 1) return false;
  }
  return true;
}

// 11
Outcome sphere_machinery() {
  ts::Rng rng(111);
  double worst_lift = 0.0;
  const auto quad = make_quadratic(SpdMatrix(rng.spd(2)));
  const std::vector<LegendreGenerator> gens{make_burg(2), quad, make_extended_kl(2)};
  for (int k = 0; k < 100; ++k) {
    const auto& g = gens[static_cast<std::size_t>(k) % gens.size()];
    const BregmanSphere s(g, rng.uniform_vector(2, 0.2, 4), rng.uniform(0, 3));
    const BregmanSphere back = hyperplane_to_sphere(g, lift_sphere(s));
    worst_lift = std::max({worst_lift, (back.center - s.center).norm(), std::abs(back.radius - s.radius)});
  }

  const auto eu = make_quadratic(SpdMatrix::identity(2));
  double worst_circle = 0.0;
  bool circle_counts = true;
  for (int k = 0; k < 50; ++k) {
    const Vector c1 = rng.uniform_vector(2, -2, 2);
    const Vector c2 = rng.uniform_vector(2, -2, 2);
    const double d = (c1 - c2).norm();
    const double r1 = rng.uniform(0.6, 1.0) * d;
    const double r2 = rng.uniform(0.6, 1.0) * d;
    const auto res = intersect_right_spheres(eu, {BregmanSphere(eu, c1, 0.5 * r1 * r1), BregmanSphere(eu, c2, 0.5 * r2 * r2)});
    const auto ref = ts::circle_intersection(c1, r1, c2, r2);
    if (res.points.size() != ref.size()) {
      circle_counts = false;
      continue;
    }
    for (const Vector& p : ref) {
      double best = 1e300;
      for (const Vector& q : res.points) best = std::min(best, (p - q).norm());
      worst_circle = std::max(worst_circle, best);
    }
  }

  double worst_res = 0.0;
  int configs = 0, mismatched = 0, total_points = 0;
  for (double a : {-1.0, 0.0, 0.5}) {
    auto div = [a](const Vector& x, const Vector& q) { return ts::alpha_div_direct(a, x, q); };
    for (int m : {2, 3}) {
      for (int rep = 0; rep < 3; ++rep) {
        ++configs;
        // Radii come from a common point so the intersection is non-empty.
        const bool constrained = m == 3 && rep == 2;
        std::vector<AlphaSphere> spheres;
        Vector x = constrained ? rng.simplex(3) : rng.uniform_vector(m, 0.6, 1.6);
        if (constrained) x = 0.5 * x + 0.5 * Vector::Constant(3, 1.0 / 3);
        const int count = constrained ? 2 : m;
        for (int i = 0; i < count; ++i) {
          // Constrained entries of x are at least 1/6, so centers stay positive.
          Vector c = x + rng.uniform_vector(m, constrained ? -0.1 : -0.3, constrained ? 0.1 : 0.3);
          if (constrained) c /= c.sum();
          spheres.push_back({c, div(x, c)});
        }
        const auto res = alpha_sphere_intersection(a, spheres, constrained);
        for (const auto& row : res.residuals) {
          for (double r : row) worst_res = std::max(worst_res, std::abs(r));
        }
        total_points += static_cast<int>(res.points.size());

        std::vector<Vector> oracle;
        if (constrained) {
          auto residual = [&](const Vector& y) {
            const Vector q = vec({y[0], y[1], 1 - y[0] - y[1]});
            if ((q.array() <= 0).any()) return Vector(Vector::Constant(2, std::nan("")));
            return Vector(vec({div(q, spheres[0].center) - spheres[0].radius,
                               div(q, spheres[1].center) - spheres[1].radius}));
          };
          for (const Vector& y : ts::grid_scan_roots(residual, vec({0, 0}), vec({1, 1}), 400, 5e-2, 1e-13, 1e-6)) {
            oracle.push_back(vec({y[0], y[1], 1 - y[0] - y[1]}));
          }
        } else {
          auto residual = [&](const Vector& q) {
            if ((q.array() <= 0).any()) return Vector(Vector::Constant(m, std::nan("")));
            Vector r(m);
            for (int i = 0; i < m; ++i) {
              r[i] = div(q, spheres[static_cast<std::size_t>(i)].center) - spheres[static_cast<std::size_t>(i)].radius;
            }
            return r;
          };
          oracle = ts::grid_scan_roots(residual, Vector::Constant(m, 0.0), Vector::Constant(m, 3.5),
                                       m == 2 ? 400 : 90, m == 2 ? 5e-2 : 1e-1, 1e-13, 1e-6);
        }
        if (oracle.empty() || !same_point_sets(res.points, oracle, 1e-6)) ++mismatched;
      }
    }
  }
  return {worst_lift < 1e-10 && circle_counts && worst_circle < 1e-10 && worst_res < 1e-7 && mismatched == 0,
          fmt("lift roundtrip %.2e", worst_lift) + fmt(", circles %.2e", worst_circle) +
              (circle_counts ? "" : " (count mismatch)") + fmt(", alpha residual %.2e", worst_res) +
              fmt(" on %.0f points", total_points) + fmt(", grid-scan mismatches %.0f", mismatched) +
              fmt("/%.0f", configs)};
}

// 12
Outcome gaussian_family() {
  ts::Rng rng(112);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int d = 1 + k % 2;
    const auto g = make_gaussian_cumulant(d);
    const Vector m1 = rng.uniform_vector(d, -2, 2), m2 = rng.uniform_vector(d, -2, 2);
    const Matrix s1 = rng.spd(d), s2 = rng.spd(d);
    const double ref = ts::gaussian_kl(m1, s1, m2, s2);
    const Vector t1 = gaussian_natural(m1, SpdMatrix(s1));
    const Vector t2 = gaussian_natural(m2, SpdMatrix(s2));
    worst = std::max({worst, std::abs(gaussian_kld(m1, SpdMatrix(s1), m2, SpdMatrix(s2)) - ref),
                      std::abs(bregman::bregman(g, t2, t1) - ref)});
  }
  bool exact = true;
  for (int d = 1; d <= 3; ++d) {
    // Hermitian positive definite: Z Z^H + I with Z complex.
    const Matrix zr = rng.uniform_vector(d * d, -1, 1).reshaped(d, d);
    const Matrix zi = rng.uniform_vector(d * d, -1, 1).reshaped(d, d);
    ComplexMatrix cov{zr * zr.transpose() + zi * zi.transpose() + Matrix::Identity(d, d),
                      zi * zr.transpose() - zr * zi.transpose()};
    const ComplexVector mean{rng.uniform_vector(d, -1, 1), rng.uniform_vector(d, -1, 1)};
    const Matrix r = realify_matrix(cov);
    exact = exact && r.topLeftCorner(d, d) == cov.re && r.bottomRightCorner(d, d) == cov.re &&
            r.topRightCorner(d, d) == -cov.im && r.bottomLeftCorner(d, d) == cov.im;
    const auto [mu, sigma] = realify_complex(mean, cov);
    exact = exact && mu.head(d) == mean.re && mu.tail(d) == mean.im && sigma.matrix() == 0.5 * r;
  }
  return {worst < 1e-8 && exact,
          fmt("max KL err %.2e over 100 instances", worst) + (exact ? ", block structure exact" : ", block structure WRONG")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cosine dissimilarity on the circle", cosine_dissimilarity},
      {"COSH centroid of {1,2}", cosh_centroid_pair},
      {"1-D Jeffreys closed form", jeffreys_1d},
      {"categorical Jeffreys centroid", jeffreys_categorical},
      {"log-det COSH centroid", logdet_cosh},
      {"curved projection gap", curved_projection_gap},
      {"bias-variance decomposition", bias_variance_identity},
      {"representational identity", representational_identity},
      {"AWQ metric", awq_metric},
      {"reparameterization identities", reparameterization},
      {"sphere machinery", sphere_machinery},
      {"Gaussian and complex-normal KLD", gaussian_family},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2zu  %-36s %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.2fs\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
