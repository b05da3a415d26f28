#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bregman/numerics.hpp"

namespace bregman {

/// The callables that define a Legendre-type generator (Theta, F).
///
/// `in_domain` describes the open domain Theta, where F is differentiable.
/// `in_closure` describes where F itself may be evaluated; it defaults to
/// `in_domain` and is wider only when F extends continuously to part of the
/// boundary (e.g. 0 log 0 = 0). `in_dual_domain` describes H = grad F(Theta).
/// `hessian` is optional; when absent a finite-difference Jacobian of `grad`
/// is used. `interior_point` is any point of Theta, used to start numeric
/// inversions.
struct GeneratorParts {
  std::string name;
  int dim = 0;
  PredicateFn in_domain;
  PredicateFn in_closure;
  PredicateFn in_dual_domain;
  ObjectiveFn value;
  VectorFn grad;
  VectorFn grad_inv;
  ObjectiveFn conjugate;
  MatrixFn hessian;
  Vector interior_point;
  /// Optional direct form of B_F(t1 : t2), used by bregman() in place of the
  /// expanded F(t1) - F(t2) - <t1 - t2, grad F(t2)>.
  std::function<double(const Vector&, const Vector&)> divergence;
};

/// A strictly convex, differentiable potential F of Legendre type together
/// with its gradient map, the inverse gradient map and its convex conjugate.
///
/// Instances are immutable and cheap to copy (shared state). Every accessor
/// validates dimension and domain membership before evaluating and throws
/// ValidationError / DomainError accordingly.
class LegendreGenerator {
 public:
  explicit LegendreGenerator(GeneratorParts parts);

  const std::string& name() const noexcept { return parts_->name; }
  int dim() const noexcept { return parts_->dim; }
  const Vector& interior_point() const noexcept { return parts_->interior_point; }

  bool contains(const Vector& theta) const;
  bool closure_contains(const Vector& theta) const;
  bool dual_contains(const Vector& eta) const;

  /// F(theta); theta may lie on the part of the boundary where F is finite.
  double value(const Vector& theta) const;
  /// eta = grad F(theta); theta in the open domain.
  Vector grad(const Vector& theta) const;
  /// theta = (grad F)^{-1}(eta); eta in the open dual domain.
  Vector grad_inv(const Vector& eta) const;
  /// F*(eta).
  double conjugate_value(const Vector& eta) const;
  /// Hessian of F at theta.
  Matrix hessian(const Vector& theta) const;

  const GeneratorParts& parts() const noexcept { return *parts_; }

 private:
  void check_dim(const Vector& v, const char* what) const;
  std::shared_ptr<const GeneratorParts> parts_;
};

// -- concrete generators ----------------------------------------------------

/// F(theta) = 1/2 theta^T Q theta on R^m.
LegendreGenerator make_quadratic(const SpdMatrix& q);
/// F(theta) = sum theta_i log theta_i - theta_i on the positive orthant;
/// extended Kullback-Leibler divergence.
LegendreGenerator make_extended_kl(int m);
/// Burg negentropy F(theta) = -sum log theta_i; Itakura-Saito divergence.
LegendreGenerator make_burg(int m);
/// F(Theta) = -log det Theta on d x d SPD matrices in packed coordinates
/// (see pack_symmetric).
LegendreGenerator make_logdet(int d);
/// Shannon negentropy on the open probability simplex, parameterized by the
/// first m-1 probabilities. Its divergence is the KL divergence between
/// categorical distributions.
LegendreGenerator make_shannon_simplex(int m);
/// Cumulant function of the d-variate Gaussian family in natural
/// coordinates theta = (Sigma^{-1} mu, pack(Sigma^{-1} / 2)).
LegendreGenerator make_gaussian_cumulant(int d);

/// Scalar potential of the alpha-embedding, written on the centered
/// representation y (see AlphaRepresentation::centered):
///   alpha != +-1 : 2/(1+alpha) ((1-alpha)/2 y)^{2/(1-alpha)}
///   alpha == -1  : y log y - y
///   alpha == +1  : exp(y)
/// Throws DomainError outside its domain.
double alpha_potential(double alpha, double y);

/// Separable generator F_alpha(r) = sum_i alpha_potential(alpha, r_i + c)
/// acting on alpha-representations r = r_alpha(q), where c is the offset
/// between the representation and its centered form (2/(1-alpha), or 0 for
/// alpha = 1). Values of alpha within 1e-8 of +-1 use the limiting potential.
LegendreGenerator make_alpha_generator(double alpha, int m);

/// Generator of the additively weighted quadratic symmetrization:
/// F(x1) + a/2 |x1|^2 + F*(x2) + b/2 |x2|^2 on Theta x H.
LegendreGenerator make_awq_lifted(const LegendreGenerator& base, double alpha, double beta);

/// (H, F*) with the roles of grad and grad_inv exchanged.
LegendreGenerator conjugate_generator(const LegendreGenerator& g);

/// Weighted separable generator x -> sum_i c_i f(x_i) built from a scalar
/// generator f (dim 1) and positive coefficients c.
LegendreGenerator make_weighted_separable(const LegendreGenerator& scalar, const Vector& coeffs);

// -- restrictions -----------------------------------------------------------

/// Univariate generator u -> F(theta + u (theta' - theta)).
struct SegmentGenerator {
  LegendreGenerator base;
  Vector theta;
  Vector theta_prime;
  LegendreGenerator generator;

  Vector point_at(double u) const;
};

/// Restriction of F to the line through theta and theta'. Throws
/// DomainError when theta is not in the closure of the domain or theta' is
/// not interior, ValidationError when theta == theta'.
SegmentGenerator restrict_to_segment(const LegendreGenerator& g, const Vector& theta,
                                     const Vector& theta_prime);

/// Generator lambda -> F(theta_0 + sum_i lambda_i (theta_i - theta_0)) on the
/// open (k-1)-simplex of barycentric coordinates.
struct SimplexGenerator {
  LegendreGenerator base;
  std::vector<Vector> vertices;
  Matrix edges;  // columns theta_i - theta_0, i = 1..k-1
  LegendreGenerator generator;

  /// theta_bar(lambda).
  Vector point_at(const Vector& lambda) const;
  /// Barycentric coordinates (lambda_1..lambda_{k-1}) of a point of the
  /// affine hull; throws DomainError if theta is off the hull.
  Vector barycentric(const Vector& theta) const;
};

/// Throws ValidationError when the vertices are affinely dependent or the
/// count is outside [2, m+1], DomainError when a vertex is outside the
/// closure of the domain or the barycenter is not interior.
SimplexGenerator restrict_to_simplex(const LegendreGenerator& g, const std::vector<Vector>& vertices);

}  // namespace bregman
