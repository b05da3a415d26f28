#pragma once

#include <functional>
#include <string_view>

#include <Eigen/Dense>

#include "bregman/errors.hpp"

namespace bregman {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

using ScalarFn = std::function<double(double)>;
using ObjectiveFn = std::function<double(const Vector&)>;
using VectorFn = std::function<Vector(const Vector&)>;
using MatrixFn = std::function<Matrix(const Vector&)>;
using PredicateFn = std::function<bool(const Vector&)>;

struct ToleranceConfig {
  double tol_sym = 1e-10;
  double tol_root = 1e-12;
  double tol_psd = 1e-9;
  int max_iter = 200;

  /// Throws ValidationError unless all tolerances are positive and
  /// max_iter >= 1.
  void validate() const;
};

/// Throws ValidationError when any entry is NaN or infinite.
void require_finite(const Vector& v, std::string_view what);
void require_same_size(const Vector& a, const Vector& b, std::string_view what);

/// Symmetric positive-definite matrix. Symmetry (within tol_sym, relative to
/// the largest entry) and positivity of every eigenvalue are checked on
/// construction; the stored matrix is the exact symmetric part of the input.
class SpdMatrix {
 public:
  explicit SpdMatrix(const Matrix& m, double tol_sym = ToleranceConfig{}.tol_sym);

  static SpdMatrix identity(int d);
  static SpdMatrix diagonal(const Vector& diag);

  const Matrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }

  SpdMatrix inverse() const;
  double log_det() const;
  Vector solve(const Vector& rhs) const;

 private:
  Matrix m_;
};

/// Principal branch of the Lambert W function: w >= -1 with w e^w = x.
/// Throws DomainError for x < -1/e.
double lambert_w0(double x);

/// Principal square root S with S S = M.
SpdMatrix spd_sqrt(const SpdMatrix& m);
/// M^{-1/2}.
SpdMatrix spd_inv_sqrt(const SpdMatrix& m);

/// Smallest eigenvalue of the symmetric part of `sym`.
double min_eigenvalue(const Matrix& sym);

/// Loewner order test: true iff min eig(A - B) >= -tol.
bool loewner_geq(const Matrix& a, const Matrix& b, double tol);

/// Bracketed root of a continuous function. Requires f(lo) f(hi) <= 0 and
/// returns t with |f(t)| <= tol or a final bracket narrower than tol.
double find_root_1d(const ScalarFn& f, double lo, double hi, double tol,
                    int max_iter = ToleranceConfig{}.max_iter);

/// Local minimizer of a unimodal function on [lo, hi] (Brent's method).
double minimize_1d(const ScalarFn& f, double lo, double hi,
                   int max_iter = ToleranceConfig{}.max_iter);

/// Central-difference gradient with absolute step h.
Vector finite_diff_gradient(const ObjectiveFn& f, const Vector& x, double h);

/// Central-difference Jacobian (rows = outputs) with absolute step h.
Matrix finite_diff_jacobian(const VectorFn& f, const Vector& x, double h);

struct NewtonOptions {
  double grad_tol = 1e-12;
  int max_iter = 200;
};

/// Damped Newton minimization of a strictly convex function with an open
/// domain. Backtracks until the step stays in the domain and satisfies the
/// Armijo condition. Stops when the gradient norm is at most
/// grad_tol * (1 + |scale|), where scale is the initial gradient norm.
/// Throws ConvergenceError carrying the last iterate.
Vector minimize_convex_newton(const ObjectiveFn& value, const VectorFn& grad,
                              const MatrixFn& hessian, const PredicateFn& in_domain,
                              Vector x0, const NewtonOptions& opts = {});

// Symmetric-matrix packing. A d x d symmetric matrix is stored as its upper
// triangle, row by row, with off-diagonal entries scaled by sqrt(2) so that
// the Euclidean inner product of two packed vectors equals tr(A B).
int packed_size(int d);
/// Inverse of packed_size; throws ValidationError if n is not triangular.
int dim_from_packed(int n);
Vector pack_symmetric(const Matrix& m);
Matrix unpack_symmetric(const Vector& v, int d);

}  // namespace bregman
