#include <string>

#include "bregman/generators.hpp"
#include "detail.hpp"

namespace bregman {

Vector SegmentGenerator::point_at(double u) const { return theta + u * (theta_prime - theta); }

SegmentGenerator restrict_to_segment(const LegendreGenerator& g, const Vector& theta,
                                     const Vector& theta_prime) {
  require_same_size(theta, theta_prime, "restrict_to_segment");
  if (theta.size() != g.dim()) throw ValidationError("restrict_to_segment: dimension mismatch");
  require_finite(theta, "restrict_to_segment");
  require_finite(theta_prime, "restrict_to_segment");
  if (!g.closure_contains(theta)) throw DomainError("restrict_to_segment: theta outside domain");
  if (!g.contains(theta_prime)) {
    throw DomainError("restrict_to_segment: theta' must be interior");
  }
  const Vector dir = theta_prime - theta;
  if (dir.norm() == 0.0) throw ValidationError("restrict_to_segment: degenerate segment");

  auto at = [theta, dir](const Vector& u) -> Vector { return theta + u[0] * dir; };
  GeneratorParts p;
  p.name = "segment(" + g.name() + ")";
  p.dim = 1;
  p.in_domain = [g, at](const Vector& u) { return g.contains(at(u)); };
  p.in_closure = [g, at](const Vector& u) { return g.closure_contains(at(u)); };
  p.in_dual_domain = [](const Vector&) { return true; };
  p.value = [g, at](const Vector& u) { return g.value(at(u)); };
  p.grad = [g, at, dir](const Vector& u) -> Vector {
    return Vector::Constant(1, dir.dot(g.grad(at(u))));
  };
  p.hessian = [g, at, dir](const Vector& u) -> Matrix {
    return Matrix::Constant(1, 1, dir.dot(g.hessian(at(u)) * dir));
  };
  auto invert = [g, at, dir](const Vector& eta) -> Vector {
    try {
      return minimize_convex_newton(
          [&](const Vector& u) { return g.value(at(u)) - u[0] * eta[0]; },
          [&](const Vector& u) -> Vector {
            return Vector::Constant(1, dir.dot(g.grad(at(u))) - eta[0]);
          },
          [&](const Vector& u) -> Matrix {
            return Matrix::Constant(1, 1, dir.dot(g.hessian(at(u)) * dir));
          },
          [&](const Vector& u) { return g.contains(at(u)); }, Vector::Ones(1));
    } catch (const ConvergenceError&) {
      throw DomainError("segment generator: gradient value not attained on the segment");
    }
  };
  p.grad_inv = invert;
  p.conjugate = [g, at, invert](const Vector& eta) {
    const Vector u = invert(eta);
    return u[0] * eta[0] - g.value(at(u));
  };
  p.interior_point = Vector::Ones(1);
  return SegmentGenerator{g, theta, theta_prime, LegendreGenerator(std::move(p))};
}

// ---------------------------------------------------------------------------

Vector SimplexGenerator::point_at(const Vector& lambda) const {
  if (lambda.size() != edges.cols()) throw ValidationError("simplex point: dimension mismatch");
  return vertices.front() + edges * lambda;
}

Vector SimplexGenerator::barycentric(const Vector& theta) const {
  if (theta.size() != edges.rows()) throw ValidationError("barycentric: dimension mismatch");
  const Vector rhs = theta - vertices.front();
  const Vector lambda = edges.colPivHouseholderQr().solve(rhs);
  const double scale = 1.0 + theta.norm() + vertices.front().norm();
  if ((edges * lambda - rhs).norm() > 1e-9 * scale) {
    throw DomainError("barycentric: point is off the affine hull of the vertices");
  }
  return lambda;
}

SimplexGenerator restrict_to_simplex(const LegendreGenerator& g, const std::vector<Vector>& vertices) {
  const int k = static_cast<int>(vertices.size());
  const int m = g.dim();
  if (k < 2 || k > m + 1) {
    throw ValidationError("restrict_to_simplex: need between 2 and m+1 vertices");
  }
  for (const Vector& v : vertices) {
    if (v.size() != m) throw ValidationError("restrict_to_simplex: vertex dimension mismatch");
    require_finite(v, "restrict_to_simplex");
    if (!g.closure_contains(v)) throw DomainError("restrict_to_simplex: vertex outside the domain");
  }
  Matrix edges(m, k - 1);
  for (int i = 1; i < k; ++i) edges.col(i - 1) = vertices[i] - vertices[0];
  Eigen::JacobiSVD<Matrix> svd(edges);
  const Vector sv = svd.singularValues();
  if (sv.minCoeff() <= 1e-10 * std::max(1.0, sv.maxCoeff())) {
    throw ValidationError("restrict_to_simplex: vertices are affinely dependent");
  }

  const Vector origin = vertices[0];
  auto at = [origin, edges](const Vector& l) -> Vector { return origin + edges * l; };
  auto in_open = [](const Vector& l) {
    return (l.array() > detail::kInteriorMargin).all() && 1.0 - l.sum() > detail::kInteriorMargin;
  };
  auto in_closed = [](const Vector& l) { return (l.array() >= 0.0).all() && l.sum() <= 1.0; };

  GeneratorParts p;
  p.name = "simplex(" + g.name() + ")";
  p.dim = k - 1;
  p.in_domain = [g, at, in_open](const Vector& l) { return in_open(l) && g.contains(at(l)); };
  p.in_closure = [g, at, in_closed](const Vector& l) {
    return in_closed(l) && g.closure_contains(at(l));
  };
  p.in_dual_domain = [](const Vector&) { return true; };
  p.value = [g, at](const Vector& l) { return g.value(at(l)); };
  // d/d lambda_i F(theta_bar) = <theta_i - theta_0, grad F(theta_bar)>.
  p.grad = [g, at, edges](const Vector& l) -> Vector { return edges.transpose() * g.grad(at(l)); };
  p.hessian = [g, at, edges](const Vector& l) -> Matrix {
    return edges.transpose() * g.hessian(at(l)) * edges;
  };
  const Vector start = Vector::Constant(k - 1, 1.0 / k);
  if (!g.contains(at(start))) {
    throw DomainError("restrict_to_simplex: barycenter of the vertices is not interior");
  }
  auto invert = [g, at, edges, in_open, start](const Vector& eta) -> Vector {
    try {
      return minimize_convex_newton(
          [&](const Vector& l) { return g.value(at(l)) - l.dot(eta); },
          [&](const Vector& l) -> Vector { return edges.transpose() * g.grad(at(l)) - eta; },
          [&](const Vector& l) -> Matrix { return edges.transpose() * g.hessian(at(l)) * edges; },
          [&](const Vector& l) { return in_open(l) && g.contains(at(l)); }, start);
    } catch (const ConvergenceError&) {
      throw DomainError("simplex generator: gradient value not attained on the open simplex");
    }
  };
  p.grad_inv = invert;
  p.conjugate = [g, at, invert](const Vector& eta) {
    const Vector l = invert(eta);
    return l.dot(eta) - g.value(at(l));
  };
  p.interior_point = start;
  return SimplexGenerator{g, vertices, edges, LegendreGenerator(std::move(p))};
}

}  // namespace bregman
