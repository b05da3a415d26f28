#include "bregman/representational.hpp"

#include <cmath>

#include "bregman/divergences.hpp"
#include "detail.hpp"

namespace bregman {

namespace {

void require_positive(const Vector& q, const char* what) {
  require_finite(q, what);
  if (q.size() == 0) throw ValidationError(std::string(what) + ": empty vector");
  if (!(q.array() > 0.0).all()) {
    throw DomainError(std::string(what) + ": entries must be strictly positive");
  }
}

}  // namespace

AlphaRepresentation::AlphaRepresentation(double alpha) {
  if (!std::isfinite(alpha)) throw ValidationError("alpha must be finite");
  alpha_ = detail::route_alpha(alpha);
  offset_ = detail::alpha_offset(alpha_);
}

Vector AlphaRepresentation::forward(const Vector& q) const {
  require_positive(q, "alpha representation");
  if (alpha_ == 1.0) return q.array().log();
  const double p = 0.5 * (1.0 - alpha_);
  return (q.array().pow(p) - 1.0) / p;
}

Vector AlphaRepresentation::inverse(const Vector& r) const {
  require_finite(r, "alpha representation inverse");
  if (alpha_ == 1.0) return r.array().exp();
  if (!in_range(r)) throw DomainError("alpha representation inverse: value outside the range");
  const double p = 0.5 * (1.0 - alpha_);
  return (1.0 + p * r.array()).pow(1.0 / p);
}

Vector AlphaRepresentation::centered(const Vector& q) const {
  return forward(q).array() + offset_;
}

bool AlphaRepresentation::in_range(const Vector& r) const {
  if (!r.allFinite()) return false;
  if (alpha_ == 1.0) return true;
  const double p = 0.5 * (1.0 - alpha_);
  return ((1.0 + p * r.array()) > 0.0).all();
}

Vector alpha_rep(double alpha, const Vector& q) { return AlphaRepresentation(alpha).forward(q); }

double alpha_divergence(double alpha, const Vector& q1, const Vector& q2) {
  require_positive(q1, "alpha_divergence");
  require_positive(q2, "alpha_divergence");
  require_same_size(q1, q2, "alpha_divergence");
  const double a = AlphaRepresentation(alpha).alpha();
  auto kl = [](const Vector& x, const Vector& y) {
    return (x.array() * (x.array() / y.array()).log() + y.array() - x.array()).sum();
  };
  if (a == -1.0) return std::max(0.0, kl(q1, q2));
  if (a == 1.0) return std::max(0.0, kl(q2, q1));
  const double p = 0.5 * (1.0 - a);
  const double s = 0.5 * (1.0 + a);
  const double sum =
      (p * q1.array() + s * q2.array() - q1.array().pow(p) * q2.array().pow(s)).sum();
  return std::max(0.0, sum / (p * s));
}

double rep_bregman(double alpha, const Vector& q1, const Vector& q2) {
  require_same_size(q1, q2, "rep_bregman");
  const AlphaRepresentation rep(alpha);
  const LegendreGenerator g = make_alpha_generator(rep.alpha(), static_cast<int>(q1.size()));
  return bregman(g, rep.forward(q1), rep.forward(q2));
}

double rep_bregman_dual(double alpha, const Vector& q1, const Vector& q2) {
  return rep_bregman(-alpha, q2, q1);
}

double rep_fenchel_young(double alpha, const Vector& q1, const Vector& q2) {
  require_same_size(q1, q2, "rep_fenchel_young");
  const AlphaRepresentation rep(alpha);
  const AlphaRepresentation dual = rep.dual();
  const Vector y1 = rep.centered(q1);
  const Vector y2 = dual.centered(q2);
  double s = -y1.dot(y2);
  for (Eigen::Index i = 0; i < y1.size(); ++i) {
    s += alpha_potential(rep.alpha(), y1[i]) + alpha_potential(dual.alpha(), y2[i]);
  }
  return std::max(0.0, s);
}

}  // namespace bregman
