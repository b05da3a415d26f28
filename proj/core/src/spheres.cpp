#include "bregman/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "bregman/representational.hpp"

namespace bregman {

// ---------------------------------------------------------------------------
// Spheres and lifted planes

BregmanSphere::BregmanSphere(LegendreGenerator g, Vector c, double r, SphereSide s)
    : generator(std::move(g)), center(std::move(c)), radius(r), side(s) {
  if (center.size() != generator.dim()) throw ValidationError("sphere: center has wrong dimension");
  require_finite(center, "sphere center");
  if (!generator.contains(center)) throw DomainError("sphere: center outside the open domain");
  if (!std::isfinite(radius) || radius < 0.0) {
    throw ValidationError("sphere: radius must be finite and non-negative");
  }
}

double BregmanSphere::residual(const Vector& t) const {
  const double d = side == SphereSide::right ? bregman(generator, t, center)
                                             : bregman(generator, center, t);
  return d - radius;
}

LiftedHyperplane lift_sphere(const BregmanSphere& s) {
  if (s.side != SphereSide::right) {
    throw ValidationError("lift_sphere: left spheres must be dualized first (dual_sphere)");
  }
  const Vector a = s.generator.grad(s.center);
  return {a, s.generator.value(s.center) + s.radius - s.center.dot(a)};
}

BregmanSphere hyperplane_to_sphere(const LegendreGenerator& g, const LiftedHyperplane& h, double tol) {
  if (h.normal_a.size() != g.dim()) throw ValidationError("hyperplane: normal has wrong dimension");
  require_finite(h.normal_a, "hyperplane normal");
  if (!std::isfinite(h.offset_b)) throw ValidationError("hyperplane: offset must be finite");
  const Vector c = g.grad_inv(h.normal_a);
  double r = h.normal_a.dot(c) - g.value(c) + h.offset_b;
  if (r < -tol) throw EmptySphereError("hyperplane lies below the potential graph: empty sphere");
  r = std::max(r, 0.0);
  return BregmanSphere(g, c, r, SphereSide::right);
}

BregmanSphere dual_sphere(const BregmanSphere& left) {
  if (left.side != SphereSide::left) throw ValidationError("dual_sphere: left sphere expected");
  return BregmanSphere(conjugate_generator(left.generator), left.generator.grad(left.center),
                       left.radius, SphereSide::right);
}

// ---------------------------------------------------------------------------
// Intersection machinery, in the working coordinates of a generator G.

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Flat {
  Vector origin;
  Matrix dirs;
  bool consistent = true;
};

// Solution set of <a_i - a_0, x> = b_0 - b_i, with origin moved to the
// projection of `anchor`.
Flat radical_flat(const std::vector<LiftedHyperplane>& planes, const Vector& anchor) {
  const int m = static_cast<int>(anchor.size());
  const int n = static_cast<int>(planes.size());
  Flat f;
  if (n < 2) {
    f.origin = anchor;
    f.dirs = Matrix::Identity(m, m);
    return f;
  }
  Matrix a(n - 1, m);
  Vector rhs(n - 1);
  for (int i = 1; i < n; ++i) {
    a.row(i - 1) = (planes[i].normal_a - planes[0].normal_a).transpose();
    rhs[i - 1] = planes[0].offset_b - planes[i].offset_b;
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector sv = svd.singularValues();
  const double cut = 1e-10 * std::max(1.0, sv.size() ? sv.maxCoeff() : 0.0);
  int rank = 0;
  while (rank < sv.size() && sv[rank] > cut) ++rank;
  Vector x0 = Vector::Zero(m);
  for (int k = 0; k < rank; ++k) {
    x0 += svd.matrixV().col(k) * (svd.matrixU().col(k).dot(rhs) / sv[k]);
  }
  const double scale = 1.0 + rhs.norm() + a.norm() * x0.norm();
  f.consistent = (a * x0 - rhs).norm() <= 1e-9 * scale;
  f.dirs = svd.matrixV().rightCols(m - rank);
  f.origin = x0 + f.dirs * (f.dirs.transpose() * (anchor - x0));
  return f;
}

struct Equation {
  const LegendreGenerator& g;
  Vector center;
  double radius;

  // B_G(x : center) - radius, NaN outside the domain.
  double operator()(const Vector& x) const {
    if (!g.contains(x)) return kNaN;
    return bregman(g, x, center) - radius;
  }
};

// Convex side constraint h(x) = 0 with h convex on a convex domain.
struct SideConstraint {
  ObjectiveFn value;
  VectorFn grad;
  MatrixFn hessian;
  PredicateFn in_domain;
};

// Roots of the convex function phi(t) = eq(origin + t v) on the part of the
// line inside the domain.
std::vector<double> line_roots(const Equation& eq, const Vector& origin, const Vector& v, int grid) {
  auto x_at = [&](double t) -> Vector { return origin + t * v; };
  auto inside = [&](double t) { return eq.g.contains(x_at(t)); };
  auto phi = [&](double t) { return eq(x_at(t)); };

  const double s = 1.0 + origin.norm();
  std::optional<double> t0;
  if (inside(0.0)) {
    t0 = 0.0;
  } else {
    for (int k = -6; k <= 6 && !t0; ++k) {
      for (double sign : {1.0, -1.0}) {
        const double t = sign * s * std::pow(10.0, k);
        if (inside(t)) {
          t0 = t;
          break;
        }
      }
    }
  }
  if (!t0) return {};

  // Walk outward until phi is positive and increasing, or the domain ends.
  auto expand = [&](double dir) {
    double t = *t0;
    double ft = phi(t);
    double step = 1e-2 * s;
    for (int it = 0; it < 200; ++it, step *= 2.0) {
      const double tn = t + dir * step;
      if (!inside(tn)) {
        double in = t;
        double out = tn;
        for (int b = 0; b < 200 && std::abs(out - in) > 1e-15 * (1.0 + std::abs(in)); ++b) {
          const double mid = 0.5 * (in + out);
          (inside(mid) ? in : out) = mid;
        }
        return in;
      }
      const double fn = phi(tn);
      if (fn > 0.0 && fn > ft) return tn;
      t = tn;
      ft = fn;
    }
    return t;
  };
  const double lo = expand(-1.0);
  const double hi = expand(1.0);
  if (!(hi > lo)) return {};

  const int samples = std::max(grid, 3);
  int best = -1;
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<double> ts(samples);
  for (int k = 0; k < samples; ++k) {
    ts[k] = lo + (hi - lo) * k / (samples - 1);
    const double v = phi(ts[k]);
    if (std::isfinite(v) && v < best_val) {
      best_val = v;
      best = k;
    }
  }
  if (best < 0) return {};
  const double a = ts[std::max(best - 1, 0)];
  const double b = ts[std::min(best + 1, samples - 1)];
  double tmin = minimize_1d(phi, a, b);
  double fmin = phi(tmin);
  if (!(fmin <= best_val)) {
    tmin = ts[best];
    fmin = best_val;
  }

  const double tangency = 1e-12 * (1.0 + std::abs(eq.radius));
  if (fmin > tangency) return {};
  if (fmin >= -tangency) return {tmin};

  std::vector<double> roots;
  const double tol = 1e-15 * (1.0 + std::abs(tmin) + (hi - lo));
  if (phi(lo) > 0.0) roots.push_back(find_root_1d(phi, lo, tmin, tol, 400));
  if (phi(hi) > 0.0) roots.push_back(find_root_1d(phi, tmin, hi, tol, 400));
  return roots;
}

// Points of a two-dimensional flat where h = 0 and the sphere equation
// holds: rays from an interior point of {h <= 0} meet h = 0 once; the
// sphere equation is then solved along that curve by angle.
std::vector<Vector> plane_curve_roots(const Equation& eq, const SideConstraint& h, const Flat& flat,
                                      const std::vector<Vector>& anchors, int grid) {
  const Matrix& n = flat.dirs;
  auto x_at = [&](const Vector& s) -> Vector { return flat.origin + n * s; };
  auto inside = [&](const Vector& s) {
    const Vector x = x_at(s);
    return h.in_domain(x) && eq.g.contains(x);
  };

  std::optional<Vector> start;
  for (const Vector& c : anchors) {
    const Vector s = n.transpose() * (c - flat.origin);
    if (inside(s)) {
      start = s;
      break;
    }
  }
  if (!start) return {};

  Vector base = *start;
  if (h.value(x_at(base)) >= 0.0) {
    try {
      base = minimize_convex_newton(
          [&](const Vector& s) { return h.value(x_at(s)); },
          [&](const Vector& s) -> Vector { return n.transpose() * h.grad(x_at(s)); },
          [&](const Vector& s) -> Matrix { return n.transpose() * h.hessian(x_at(s)) * n; },
          inside, base, NewtonOptions{1e-10, 100});
    } catch (const ConvergenceError& e) {
      base = e.last_iterate();
    }
  }
  if (!(h.value(x_at(base)) < 0.0)) return {};

  // Crossing of h = 0 along the ray base + rho d; nullopt when the ray leaves
  // the domain first.
  auto crossing = [&](double psi) -> std::optional<Vector> {
    Vector d(2);
    d << std::cos(psi), std::sin(psi);
    auto hv = [&](double rho) { return h.value(x_at(base + rho * d)); };
    double in = 0.0;
    double rho = 1e-3 * (1.0 + base.norm());
    double out = -1.0;
    for (int it = 0; it < 200; ++it, rho *= 2.0) {
      if (!inside(base + rho * d)) {
        double lo = in;
        double hi = rho;
        for (int b = 0; b < 200 && hi - lo > 1e-15 * (1.0 + lo); ++b) {
          const double mid = 0.5 * (lo + hi);
          (inside(base + mid * d) ? lo : hi) = mid;
        }
        if (hv(lo) > 0.0) out = lo;
        break;
      }
      if (hv(rho) > 0.0) {
        out = rho;
        break;
      }
      in = rho;
    }
    if (out < 0.0) return std::nullopt;
    const double r = find_root_1d(hv, in, out, 1e-15 * (1.0 + out), 400);
    return x_at(base + r * d);
  };
  auto phi = [&](double psi) {
    const auto x = crossing(psi);
    return x ? eq(*x) : kNaN;
  };

  const int samples = std::max(grid, 8);
  std::vector<double> psis(samples + 1);
  std::vector<double> vals(samples + 1);
  for (int k = 0; k <= samples; ++k) {
    psis[k] = 2.0 * std::numbers::pi * k / samples;
    vals[k] = k < samples ? phi(psis[k]) : vals[0];
  }
  std::vector<Vector> out;
  for (int k = 0; k < samples; ++k) {
    const double f0 = vals[k];
    const double f1 = vals[k + 1];
    if (!std::isfinite(f0) || !std::isfinite(f1)) continue;
    if (f0 == 0.0) {
      out.push_back(*crossing(psis[k]));
      continue;
    }
    if (std::signbit(f0) == std::signbit(f1) || f1 == 0.0) continue;
    try {
      const double psi = find_root_1d(phi, psis[k], psis[k + 1], 1e-15, 400);
      if (auto x = crossing(psi)) out.push_back(*x);
    } catch (const DomainError&) {
      // NaN inside the bracket: the curve leaves the domain between samples.
    }
  }
  return out;
}

struct WorkingResult {
  std::vector<Vector> points;
  Flat flat;
  bool enumerable = true;
};

// Shared driver: spheres given by (center, radius) in the coordinates of g.
WorkingResult intersect_working(const LegendreGenerator& g, const std::vector<Vector>& centers,
                                const std::vector<double>& radii, const SideConstraint* side,
                                int grid) {
  const int m = g.dim();
  WorkingResult res;

  // A zero-radius sphere is a single point.
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (radii[i] != 0.0) continue;
    res.flat.origin = centers[i];
    res.flat.dirs = Matrix(m, 0);
    bool ok = !side || std::abs(side->value(centers[i])) <= 1e-10;
    for (std::size_t j = 0; j < centers.size() && ok; ++j) {
      ok = std::abs(bregman(g, centers[i], centers[j]) - radii[j]) <= 1e-10 * (1.0 + radii[j]);
    }
    if (ok) res.points.push_back(centers[i]);
    return res;
  }

  std::vector<LiftedHyperplane> planes;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const LiftedHyperplane p = lift_sphere(BregmanSphere(g, centers[i], radii[i]));
    bool duplicate = false;
    for (const auto& q : planes) {
      const double scale = 1.0 + q.normal_a.norm() + std::abs(q.offset_b);
      if ((p.normal_a - q.normal_a).norm() <= 1e-12 * scale &&
          std::abs(p.offset_b - q.offset_b) <= 1e-12 * scale) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      planes.push_back(p);
      kept.push_back(i);
    }
  }

  res.flat = radical_flat(planes, centers[kept.front()]);
  if (!res.flat.consistent) return res;
  if (planes.size() == 1) {
    // Every sphere coincides: the intersection is the sphere itself.
    res.enumerable = false;
    return res;
  }

  const Equation eq{g, centers[kept.front()], radii[kept.front()]};
  const int free = static_cast<int>(res.flat.dirs.cols());
  if (free == 0) {
    const Vector& x = res.flat.origin;
    const double v = eq(x);
    if (std::isfinite(v) && std::abs(v) <= 1e-8 * (1.0 + eq.radius) &&
        (!side || std::abs(side->value(x)) <= 1e-10)) {
      res.points.push_back(x);
    }
    return res;
  }
  if (free == 1) {
    const Vector v = res.flat.dirs.col(0);
    for (double t : line_roots(eq, res.flat.origin, v, grid)) {
      const Vector x = res.flat.origin + t * v;
      if (side && !(side->in_domain(x) && std::abs(side->value(x)) <= 1e-10)) continue;
      res.points.push_back(x);
    }
    return res;
  }
  if (free == 2 && side) {
    std::vector<Vector> anchors{res.flat.origin};
    for (const Vector& c : centers) anchors.push_back(c);
    res.points = plane_curve_roots(eq, *side, res.flat, anchors, grid);
    return res;
  }
  res.enumerable = false;
  return res;
}

void check_grid(int grid) {
  if (grid < 3) throw ValidationError("sphere intersection: grid must be at least 3");
}

}  // namespace

IntersectionResult intersect_right_spheres(const LegendreGenerator& g,
                                           const std::vector<BregmanSphere>& spheres, int grid) {
  check_grid(grid);
  if (spheres.size() < 2) throw ValidationError("sphere intersection: at least two spheres required");
  std::vector<Vector> centers;
  std::vector<double> radii;
  for (const auto& s : spheres) {
    if (s.side != SphereSide::right) throw ValidationError("intersect_right_spheres: left sphere given");
    if (s.center.size() != g.dim()) throw ValidationError("sphere intersection: dimension mismatch");
    centers.push_back(s.center);
    radii.push_back(s.radius);
  }
  const WorkingResult w = intersect_working(g, centers, radii, nullptr, grid);
  IntersectionResult out;
  out.flat_origin = w.flat.origin;
  out.flat_directions = w.flat.dirs;
  out.enumerable = w.enumerable;
  out.consistent = w.flat.consistent;
  out.points = w.points;
  for (const Vector& p : out.points) {
    std::vector<double> r;
    for (const auto& s : spheres) r.push_back(bregman(g, p, s.center) - s.radius);
    out.residuals.push_back(std::move(r));
  }
  return out;
}

IntersectionResult intersect_left_spheres(const LegendreGenerator& g,
                                          const std::vector<BregmanSphere>& spheres, int grid) {
  check_grid(grid);
  if (spheres.size() < 2) throw ValidationError("sphere intersection: at least two spheres required");
  const LegendreGenerator dual = conjugate_generator(g);
  std::vector<Vector> centers;
  std::vector<double> radii;
  for (const auto& s : spheres) {
    if (s.side != SphereSide::left) throw ValidationError("intersect_left_spheres: right sphere given");
    if (s.center.size() != g.dim()) throw ValidationError("sphere intersection: dimension mismatch");
    centers.push_back(g.grad(s.center));
    radii.push_back(s.radius);
  }
  const WorkingResult w = intersect_working(dual, centers, radii, nullptr, grid);
  IntersectionResult out;
  out.flat_origin = w.flat.origin;
  out.flat_directions = w.flat.dirs;
  out.enumerable = w.enumerable;
  out.consistent = w.flat.consistent;
  for (const Vector& eta : w.points) {
    const Vector p = g.grad_inv(eta);
    std::vector<double> r;
    for (const auto& s : spheres) r.push_back(bregman(g, s.center, p) - s.radius);
    out.points.push_back(p);
    out.residuals.push_back(std::move(r));
  }
  return out;
}

IntersectionResult alpha_sphere_intersection(double alpha, const std::vector<AlphaSphere>& spheres,
                                             bool simplex_constraint, int grid) {
  check_grid(grid);
  if (spheres.size() < 2) throw ValidationError("sphere intersection: at least two spheres required");
  const int m = static_cast<int>(spheres.front().center.size());
  const AlphaRepresentation rep(alpha);
  const LegendreGenerator g = make_alpha_generator(rep.alpha(), m);

  std::vector<Vector> centers;
  std::vector<double> radii;
  for (const auto& s : spheres) {
    if (s.center.size() != m) throw ValidationError("alpha spheres: dimension mismatch");
    if (!std::isfinite(s.radius) || s.radius < 0.0) {
      throw ValidationError("alpha spheres: radius must be finite and non-negative");
    }
    if (simplex_constraint && std::abs(s.center.sum() - 1.0) > 1e-9) {
      throw DomainError("alpha spheres: centers must lie on the probability simplex");
    }
    centers.push_back(rep.forward(s.center));
    radii.push_back(s.radius);
  }

  // h(r) = sum_j q_j(r) - 1 with q_j = r_alpha^{-1}(r_j).
  SideConstraint side;
  const double a = rep.alpha();
  const double p = 0.5 * (1.0 - a);
  side.in_domain = [rep](const Vector& r) { return rep.in_range(r); };
  side.value = [rep](const Vector& r) { return rep.inverse(r).sum() - 1.0; };
  side.grad = [rep, a, p](const Vector& r) -> Vector {
    const Vector q = rep.inverse(r);
    return a == 1.0 ? q : Vector(q.array().pow(1.0 - p));
  };
  side.hessian = [rep, a, p](const Vector& r) -> Matrix {
    const Vector q = rep.inverse(r);
    if (a == 1.0) return q.asDiagonal();
    return ((1.0 - p) * q.array().pow(1.0 - 2.0 * p)).matrix().asDiagonal();
  };

  const WorkingResult w =
      intersect_working(g, centers, radii, simplex_constraint ? &side : nullptr, grid);
  IntersectionResult out;
  out.flat_origin = w.flat.origin;
  out.flat_directions = w.flat.dirs;
  out.enumerable = w.enumerable;
  out.consistent = w.flat.consistent;
  for (const Vector& r : w.points) {
    const Vector q = rep.inverse(r);
    std::vector<double> res;
    for (const auto& s : spheres) res.push_back(alpha_divergence(alpha, q, s.center) - s.radius);
    out.points.push_back(q);
    out.residuals.push_back(std::move(res));
  }
  return out;
}

}  // namespace bregman
