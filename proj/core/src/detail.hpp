#pragma once

#include <cmath>

#include "bregman/numerics.hpp"

namespace bregman::detail {

// Open-domain membership is tested with this absolute margin.
inline constexpr double kInteriorMargin = 1e-12;
// alpha values this close to +-1 take the limiting (log/exp) branch.
inline constexpr double kAlphaSnap = 1e-8;

inline bool all_positive(const Vector& v) { return (v.array() > kInteriorMargin).all(); }

inline double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

inline bool is_spd(const Matrix& m) {
  if (!m.allFinite()) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > kInteriorMargin;
}

inline Matrix spd_inverse(const Matrix& m) {
  Eigen::LLT<Matrix> llt(0.5 * (m + m.transpose()));
  if (llt.info() != Eigen::Success) throw DomainError("matrix is not positive definite");
  Matrix inv = llt.solve(Matrix::Identity(m.rows(), m.cols()));
  return 0.5 * (inv + inv.transpose());
}

inline double spd_log_det(const Matrix& m) {
  Eigen::LLT<Matrix> llt(0.5 * (m + m.transpose()));
  if (llt.info() != Eigen::Success) throw DomainError("matrix is not positive definite");
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

inline double route_alpha(double alpha) {
  if (std::abs(alpha - 1.0) < kAlphaSnap) return 1.0;
  if (std::abs(alpha + 1.0) < kAlphaSnap) return -1.0;
  return alpha;
}

// Shift between r_alpha (which vanishes at q = 1) and the centered
// representation on which the potential is written.
inline double alpha_offset(double routed_alpha) {
  return routed_alpha == 1.0 ? 0.0 : 2.0 / (1.0 - routed_alpha);
}

}  // namespace bregman::detail
