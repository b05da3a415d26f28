#pragma once

#include <string>

#include "bregman/generators.hpp"

namespace bregman {

/// B_F(theta1 : theta2) = F(theta1) - F(theta2) - <theta1 - theta2, grad F(theta2)>.
/// theta1 may lie on the boundary where F is finite; theta2 must be interior.
/// Tiny negative round-off is clamped to 0.
double bregman(const LegendreGenerator& g, const Vector& theta1, const Vector& theta2);

/// Y_F(theta : eta) = F(theta) + F*(eta) - <theta, eta>.
double fenchel_young(const LegendreGenerator& g, const Vector& theta, const Vector& eta);

/// An embedding u -> theta(u) of a low-dimensional parameter space into the
/// domain of a generator.
struct CurvedModel {
  std::string name;
  int u_dim = 0;
  int theta_dim = 0;
  VectorFn embed;
  PredicateFn in_domain;  // on u; empty means every finite u

  /// theta(u); validates the dimension and the u-domain.
  Vector theta(const Vector& u) const;
  bool contains(const Vector& u) const;
};

/// theta(u) = center + radius (cos u, sin u).
CurvedModel make_circle_model(double radius = 1.0, const Vector& center = Vector::Zero(2));
/// theta(u) = center + (a cos u, b sin u).
CurvedModel make_ellipse_model(double a, double b, const Vector& center = Vector::Zero(2));

/// B_F(theta(u1) : theta(u2)).
double curved_divergence(const LegendreGenerator& g, const CurvedModel& model, const Vector& u1,
                         const Vector& u2);

/// Jeffreys-Bregman divergence S_F = B_F(t1:t2) + B_F(t2:t1).
double symmetrized(const LegendreGenerator& g, const Vector& theta1, const Vector& theta2);

/// (F(t1) + F(t2)) / 2 - F((t1 + t2) / 2).
double jensen(const LegendreGenerator& g, const Vector& theta1, const Vector& theta2);

/// Scaled skew Jensen divergence
///   (a F(l) + (1-a) F(r) - F(a l + (1-a) r)) / (a (1-a)),  a in (0, 1).
/// Tends to B_F(l:r) as a -> 0 and to B_F(r:l) as a -> 1.
double skew_jensen(const LegendreGenerator& g, double alpha, const Vector& theta_l,
                   const Vector& theta_r);

/// S_F^(a,b)(t1, t2) = <t2 - t1, grad F(t2) - grad F(t1)>
///                   + a/2 |t2 - t1|^2 + b/2 |grad F(t2) - grad F(t1)|^2.
double awq_divergence(const LegendreGenerator& g, double alpha, double beta, const Vector& theta1,
                      const Vector& theta2);

/// Phi(theta) = (sqrt(a) theta + grad F(theta) / sqrt(a), sqrt((ab - 1)/a) grad F(theta)),
/// so that S_F^(a,b)(t1, t2) = |Phi(t1) - Phi(t2)|^2 / 2. Requires a > 0 and ab >= 1.
Vector awq_feature_map(const LegendreGenerator& g, double alpha, double beta, const Vector& theta);

/// Matrix-weighted variant
///   S_F(t1, t2) + 1/2 dt^T A dt + 1/2 deta^T B deta,
/// with dt = t2 - t1 and deta = grad F(t2) - grad F(t1). With A = aI, B = bI
/// this equals awq_divergence(g, a, b, ...).
double awq_matrix_divergence(const LegendreGenerator& g, const SpdMatrix& a, const SpdMatrix& b,
                             const Vector& theta1, const Vector& theta2);

/// A non-negative function sampled on a finite grid, with per-point measure
/// weights (counting or quadrature).
struct DiscreteDensity {
  Vector values;
  Vector measure;

  /// Counting measure (all weights 1).
  explicit DiscreteDensity(Vector values);
  DiscreteDensity(Vector values, Vector measure);

  int size() const noexcept { return static_cast<int>(values.size()); }
};

/// sum_i w_i mu_i B_f(p_i : q_i) for a scalar generator f.
double pointwise_divergence(const LegendreGenerator& f, const Vector& w, const DiscreteDensity& p,
                            const DiscreteDensity& q);

// -- Gaussian family -----------------------------------------------------------

/// Natural parameters (Sigma^{-1} mu, pack(Sigma^{-1} / 2)) of N(mu, Sigma),
/// in the coordinates of make_gaussian_cumulant.
Vector gaussian_natural(const Vector& mu, const SpdMatrix& sigma);

/// Moment parameters (mu, Sigma) recovered from natural parameters.
std::pair<Vector, SpdMatrix> gaussian_moments(const Vector& theta, int d);

/// KL(N(mu1, S1) : N(mu2, S2)) computed as the reverse Bregman divergence
/// B_F(theta2 : theta1) of the Gaussian cumulant.
double gaussian_kld(const Vector& mu1, const SpdMatrix& sigma1, const Vector& mu2,
                    const SpdMatrix& sigma2);

/// Closed-form Gaussian KL divergence (trace / Mahalanobis / log-det terms).
double gaussian_kld_closed_form(const Vector& mu1, const SpdMatrix& sigma1, const Vector& mu2,
                                const SpdMatrix& sigma2);

/// Complex vectors and matrices as explicit real and imaginary parts.
struct ComplexVector {
  Vector re;
  Vector im;
};

struct ComplexMatrix {
  Matrix re;
  Matrix im;
};

/// [z]_R = (Re z, Im z).
Vector realify_vector(const ComplexVector& z);
/// [A + iB]_R = [[A, -B], [B, A]].
Matrix realify_matrix(const ComplexMatrix& m);

/// Real 2d-variate normal equivalent to a circular complex normal
/// CN(mean, cov): mean [m]_R and covariance [cov]_R / 2. cov must be
/// Hermitian positive definite.
std::pair<Vector, SpdMatrix> realify_complex(const ComplexVector& mean, const ComplexMatrix& cov);

}  // namespace bregman
