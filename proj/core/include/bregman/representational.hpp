#pragma once

#include "bregman/generators.hpp"

namespace bregman {

/// Componentwise alpha-representation of positive measures:
///   r_alpha(x) = 2/(1-alpha) (x^{(1-alpha)/2} - 1)   (alpha != 1)
///   r_1(x)     = log x
/// alpha within 1e-8 of +-1 is snapped to +-1.
class AlphaRepresentation {
 public:
  explicit AlphaRepresentation(double alpha);

  /// The (possibly snapped) alpha in use.
  double alpha() const noexcept { return alpha_; }
  /// Shift between r_alpha and the centered representation (2/(1-alpha), or 0 at alpha = 1).
  double offset() const noexcept { return offset_; }

  Vector forward(const Vector& q) const;
  Vector inverse(const Vector& r) const;
  /// r_alpha(q) + offset: the coordinates the potential is written in.
  Vector centered(const Vector& q) const;
  /// True when r is the image of some positive q.
  bool in_range(const Vector& r) const;

  AlphaRepresentation dual() const { return AlphaRepresentation(-alpha_); }

 private:
  double alpha_;
  double offset_;
};

/// r_alpha(q), componentwise. Throws DomainError unless q > 0.
Vector alpha_rep(double alpha, const Vector& q);

/// Extended alpha-divergence between positive measures:
///   4/(1-a^2) sum((1-a)/2 q1 + (1+a)/2 q2 - q1^{(1-a)/2} q2^{(1+a)/2}),
/// KL+(q1:q2) at a = -1 and KL+(q2:q1) at a = +1.
double alpha_divergence(double alpha, const Vector& q1, const Vector& q2);

/// B_{F_alpha}(R_alpha(q1) : R_alpha(q2)) with F_alpha = make_alpha_generator(alpha, m).
double rep_bregman(double alpha, const Vector& q1, const Vector& q2);

/// B_{F_-alpha}(R_-alpha(q2) : R_-alpha(q1)).
double rep_bregman_dual(double alpha, const Vector& q1, const Vector& q2);

/// Fenchel-Young form F_alpha(y1) + F_-alpha(y2*) - <y1, y2*> with y1 the
/// centered alpha-representation of q1 and y2* the centered
/// (-alpha)-representation of q2.
double rep_fenchel_young(double alpha, const Vector& q1, const Vector& q2);

}  // namespace bregman
