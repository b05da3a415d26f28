#include "bregman/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace bregman {

void ToleranceConfig::validate() const {
  if (!(tol_sym > 0) || !(tol_root > 0) || !(tol_psd > 0)) {
    throw ValidationError("tolerances must be positive");
  }
  if (max_iter < 1) throw ValidationError("max_iter must be at least 1");
}

void require_finite(const Vector& v, std::string_view what) {
  if (!v.allFinite()) {
    throw ValidationError(std::string(what) + ": non-finite entry");
  }
}

void require_same_size(const Vector& a, const Vector& b, std::string_view what) {
  if (a.size() != b.size()) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
}

// ---------------------------------------------------------------------------
// SpdMatrix

SpdMatrix::SpdMatrix(const Matrix& m, double tol_sym) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("SPD matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw ValidationError("SPD matrix has non-finite entries");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol_sym * scale) {
    throw DomainError("matrix is not symmetric");
  }
  m_ = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw DomainError("matrix is not positive definite");
  }
}

SpdMatrix SpdMatrix::identity(int d) { return SpdMatrix(Matrix::Identity(d, d)); }

SpdMatrix SpdMatrix::diagonal(const Vector& diag) {
  return SpdMatrix(Matrix(diag.asDiagonal()));
}

SpdMatrix SpdMatrix::inverse() const {
  Eigen::LLT<Matrix> llt(m_);
  return SpdMatrix(llt.solve(Matrix::Identity(dim(), dim())), 1e-8);
}

double SpdMatrix::log_det() const {
  Eigen::LLT<Matrix> llt(m_);
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

Vector SpdMatrix::solve(const Vector& rhs) const {
  if (rhs.size() != m_.rows()) throw ValidationError("SPD solve: dimension mismatch");
  return Eigen::LLT<Matrix>(m_).solve(rhs);
}

// ---------------------------------------------------------------------------
// Lambert W, principal branch.
//
// Initial guesses: branch-point series near -1/e, log1p for moderate x and the
// asymptotic L1 - L2 + L2/L1 for large x; then Halley iteration.

double lambert_w0(double x) {
  constexpr double inv_e = 1.0 / std::numbers::e;
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x < -inv_e) {
    if (x > -inv_e - 4 * std::numeric_limits<double>::epsilon()) return -1.0;
    throw DomainError("lambert_w0: argument below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x < -0.32) {
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
  } else if (x < 3.0) {
    w = std::log1p(x);
    if (x > 0.5) w *= 0.75;
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    const double next = w - step;
    if (!std::isfinite(next)) break;
    w = std::max(next, -1.0);
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// SPD functions

namespace {

Matrix spectral_apply(const Matrix& m, double (*fn)(double)) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Vector mapped = es.eigenvalues().unaryExpr(fn);
  Matrix out = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
  return 0.5 * (out + out.transpose());
}

}  // namespace

SpdMatrix spd_sqrt(const SpdMatrix& m) {
  return SpdMatrix(spectral_apply(m.matrix(), [](double l) { return std::sqrt(l); }));
}

SpdMatrix spd_inv_sqrt(const SpdMatrix& m) {
  return SpdMatrix(spectral_apply(m.matrix(), [](double l) { return 1.0 / std::sqrt(l); }));
}

double min_eigenvalue(const Matrix& sym) {
  if (sym.rows() != sym.cols()) throw ValidationError("min_eigenvalue: matrix not square");
  const Matrix s = 0.5 * (sym + sym.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool loewner_geq(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("loewner_geq: dimension mismatch");
  }
  return min_eigenvalue(a - b) >= -tol;
}

// ---------------------------------------------------------------------------
// Scalar root finding and minimization

double find_root_1d(const ScalarFn& f, double lo, double hi, double tol, int max_iter) {
  if (!(tol > 0)) throw ValidationError("find_root_1d: tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  const double flo = f(lo);
  const double fhi = f(hi);
  if (std::isnan(flo) || std::isnan(fhi)) throw DomainError("find_root_1d: NaN at bracket end");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw DomainError("find_root_1d: no sign change in bracket");
  }
  if (std::abs(flo) <= tol && std::abs(flo) <= std::abs(fhi)) return lo;
  if (std::abs(fhi) <= tol) return hi;

  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  auto done = [tol](double a, double b) { return std::abs(b - a) <= tol; };
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, iters);
  const double fa = f(a);
  const double fb = f(b);
  const double best = std::abs(fa) <= std::abs(fb) ? a : b;
  if (std::abs(b - a) > tol && std::min(std::abs(fa), std::abs(fb)) > tol) {
    throw ConvergenceError("find_root_1d: iteration limit reached", Vector::Constant(1, best));
  }
  return best;
}

double minimize_1d(const ScalarFn& f, double lo, double hi, int max_iter) {
  if (lo > hi) std::swap(lo, hi);
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  const auto [x, fx] = boost::math::tools::brent_find_minima(
      f, lo, hi, std::numeric_limits<double>::digits, iters);
  (void)fx;
  return x;
}

// ---------------------------------------------------------------------------
// Finite differences

Vector finite_diff_gradient(const ObjectiveFn& f, const Vector& x, double h) {
  if (!(h > 0)) throw ValidationError("finite_diff_gradient: step must be positive");
  Vector g(x.size());
  Vector probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Matrix finite_diff_jacobian(const VectorFn& f, const Vector& x, double h) {
  if (!(h > 0)) throw ValidationError("finite_diff_jacobian: step must be positive");
  Vector probe = x;
  Matrix jac;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const Vector fp = f(probe);
    probe[i] = x[i] - h;
    const Vector fm = f(probe);
    probe[i] = x[i];
    if (i == 0) jac.resize(fp.size(), x.size());
    jac.col(i) = (fp - fm) / (2.0 * h);
  }
  return jac;
}

// ---------------------------------------------------------------------------
// Damped Newton

Vector minimize_convex_newton(const ObjectiveFn& value, const VectorFn& grad,
                              const MatrixFn& hessian, const PredicateFn& in_domain,
                              Vector x, const NewtonOptions& opts) {
  if (!in_domain(x)) throw DomainError("Newton: starting point outside domain");
  double fx = value(x);
  Vector g = grad(x);
  const double stop = opts.grad_tol * (1.0 + g.norm());
  for (int it = 0; it < opts.max_iter; ++it) {
    if (g.norm() <= stop) return x;
    const Matrix h = hessian(x);
    Eigen::LDLT<Matrix> ldlt(0.5 * (h + h.transpose()));
    Vector dir = -ldlt.solve(g);
    if (ldlt.info() != Eigen::Success || !dir.allFinite() || dir.dot(g) >= 0) dir = -g;

    double step = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 80; ++bt, step *= 0.5) {
      const Vector trial = x + step * dir;
      if (!in_domain(trial)) continue;
      const double ft = value(trial);
      if (std::isfinite(ft) && ft <= fx + 1e-4 * step * g.dot(dir) + 1e-15 * std::abs(fx)) {
        x = trial;
        fx = ft;
        moved = true;
        break;
      }
    }
    g = grad(x);
    if (!moved) {
      // No decrease representable in double precision: accept if the gradient
      // is already at roundoff level relative to the Newton decrement.
      if (g.norm() <= 1e3 * stop) return x;
      throw ConvergenceError("Newton: line search failed", x);
    }
  }
  if (g.norm() <= stop) return x;
  throw ConvergenceError("Newton: iteration limit reached", x);
}

// ---------------------------------------------------------------------------
// Packing

int packed_size(int d) { return d * (d + 1) / 2; }

int dim_from_packed(int n) {
  const int d = static_cast<int>(std::lround((std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0));
  if (d < 1 || packed_size(d) != n) {
    throw ValidationError("packed length " + std::to_string(n) + " is not d(d+1)/2");
  }
  return d;
}

Vector pack_symmetric(const Matrix& m) {
  const int d = static_cast<int>(m.rows());
  Vector v(packed_size(d));
  int k = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      v[k++] = (i == j) ? m(i, i) : std::numbers::sqrt2 * 0.5 * (m(i, j) + m(j, i));
    }
  }
  return v;
}

Matrix unpack_symmetric(const Vector& v, int d) {
  if (v.size() != packed_size(d)) throw ValidationError("unpack_symmetric: size mismatch");
  Matrix m(d, d);
  int k = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const double x = v[k++];
      if (i == j) {
        m(i, i) = x;
      } else {
        m(i, j) = m(j, i) = x / std::numbers::sqrt2;
      }
    }
  }
  return m;
}

}  // namespace bregman
