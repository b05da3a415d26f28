#include "bregman/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "detail.hpp"

namespace bregman {

// ---------------------------------------------------------------------------
// LegendreGenerator

LegendreGenerator::LegendreGenerator(GeneratorParts parts) {
  if (parts.dim < 1) throw ValidationError("generator dimension must be >= 1");
  if (!parts.in_domain || !parts.in_dual_domain || !parts.value || !parts.grad ||
      !parts.grad_inv || !parts.conjugate) {
    throw ValidationError("generator '" + parts.name + "' is missing a required callable");
  }
  if (!parts.in_closure) parts.in_closure = parts.in_domain;
  if (parts.interior_point.size() != parts.dim || !parts.in_domain(parts.interior_point)) {
    throw ValidationError("generator '" + parts.name + "' has no valid interior point");
  }
  parts_ = std::make_shared<const GeneratorParts>(std::move(parts));
}

void LegendreGenerator::check_dim(const Vector& v, const char* what) const {
  if (v.size() != parts_->dim) {
    throw ValidationError(std::string(what) + ": expected dimension " +
                          std::to_string(parts_->dim) + " for generator '" + parts_->name +
                          "', got " + std::to_string(v.size()));
  }
  require_finite(v, what);
}

bool LegendreGenerator::contains(const Vector& theta) const {
  return theta.size() == parts_->dim && theta.allFinite() && parts_->in_domain(theta);
}

bool LegendreGenerator::closure_contains(const Vector& theta) const {
  return theta.size() == parts_->dim && theta.allFinite() && parts_->in_closure(theta);
}

bool LegendreGenerator::dual_contains(const Vector& eta) const {
  return eta.size() == parts_->dim && eta.allFinite() && parts_->in_dual_domain(eta);
}

double LegendreGenerator::value(const Vector& theta) const {
  check_dim(theta, "value");
  if (!parts_->in_closure(theta)) {
    throw DomainError("point outside the domain of generator '" + parts_->name + "'");
  }
  return parts_->value(theta);
}

Vector LegendreGenerator::grad(const Vector& theta) const {
  check_dim(theta, "grad");
  if (!parts_->in_domain(theta)) {
    throw DomainError("point outside the open domain of generator '" + parts_->name + "'");
  }
  return parts_->grad(theta);
}

Vector LegendreGenerator::grad_inv(const Vector& eta) const {
  check_dim(eta, "grad_inv");
  if (!parts_->in_dual_domain(eta)) {
    throw DomainError("point outside the dual domain of generator '" + parts_->name + "'");
  }
  return parts_->grad_inv(eta);
}

double LegendreGenerator::conjugate_value(const Vector& eta) const {
  check_dim(eta, "conjugate_value");
  if (!parts_->in_dual_domain(eta)) {
    throw DomainError("point outside the dual domain of generator '" + parts_->name + "'");
  }
  return parts_->conjugate(eta);
}

Matrix LegendreGenerator::hessian(const Vector& theta) const {
  check_dim(theta, "hessian");
  if (!parts_->in_domain(theta)) {
    throw DomainError("point outside the open domain of generator '" + parts_->name + "'");
  }
  if (parts_->hessian) return parts_->hessian(theta);

  // Central differences of the gradient with a step that keeps every probe
  // inside the open domain.
  const int m = parts_->dim;
  Matrix h(m, m);
  Vector probe = theta;
  for (int i = 0; i < m; ++i) {
    double step = 1e-6 * (1.0 + std::abs(theta[i]));
    for (int tries = 0; tries < 60; ++tries, step *= 0.5) {
      probe[i] = theta[i] + step;
      const bool up = parts_->in_domain(probe);
      probe[i] = theta[i] - step;
      const bool down = parts_->in_domain(probe);
      probe[i] = theta[i];
      if (up && down) break;
    }
    probe[i] = theta[i] + step;
    const Vector gp = parts_->grad(probe);
    probe[i] = theta[i] - step;
    const Vector gm = parts_->grad(probe);
    probe[i] = theta[i];
    h.col(i) = (gp - gm) / (2.0 * step);
  }
  return 0.5 * (h + h.transpose());
}

// ---------------------------------------------------------------------------
// Concrete generators

LegendreGenerator make_quadratic(const SpdMatrix& q) {
  const Matrix qm = q.matrix();
  const SpdMatrix qinv = q.inverse();
  const Matrix qi = qinv.matrix();
  const int m = q.dim();
  GeneratorParts p;
  p.name = "quadratic";
  p.dim = m;
  p.in_domain = [](const Vector&) { return true; };
  p.in_dual_domain = [](const Vector&) { return true; };
  p.value = [qm](const Vector& t) { return 0.5 * t.dot(qm * t); };
  p.grad = [qm](const Vector& t) -> Vector { return qm * t; };
  p.grad_inv = [q](const Vector& e) -> Vector { return q.solve(e); };
  p.conjugate = [qi](const Vector& e) { return 0.5 * e.dot(qi * e); };
  p.hessian = [qm](const Vector&) -> Matrix { return qm; };
  p.divergence = [qm](const Vector& a, const Vector& b) {
    const Vector d = a - b;
    return 0.5 * d.dot(qm * d);
  };
  p.interior_point = Vector::Zero(m);
  return LegendreGenerator(std::move(p));
}

LegendreGenerator make_extended_kl(int m) {
  if (m < 1) throw ValidationError("extended-kl: dimension must be >= 1");
  GeneratorParts p;
  p.name = "extended-kl";
  p.dim = m;
  p.in_domain = detail::all_positive;
  p.in_closure = [](const Vector& t) { return (t.array() >= 0.0).all(); };
  p.in_dual_domain = [](const Vector&) { return true; };
  p.value = [](const Vector& t) {
    double s = 0.0;
    for (double x : t) s += detail::xlogx(x) - x;
    return s;
  };
  p.grad = [](const Vector& t) -> Vector { return t.array().log(); };
  p.grad_inv = [](const Vector& e) -> Vector { return e.array().exp(); };
  p.conjugate = [](const Vector& e) { return e.array().exp().sum(); };
  p.hessian = [](const Vector& t) -> Matrix { return t.cwiseInverse().asDiagonal(); };
  p.divergence = [](const Vector& a, const Vector& b) {
    long double s = 0.0L;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const long double x = a[i], y = b[i];
      s += (x > 0.0L ? x * std::log(x / y) : 0.0L) - x + y;
    }
    return static_cast<double>(s);
  };
  p.interior_point = Vector::Ones(m);
  return LegendreGenerator(std::move(p));
}

LegendreGenerator make_burg(int m) {
  if (m < 1) throw ValidationError("burg: dimension must be >= 1");
  GeneratorParts p;
  p.name = "burg";
  p.dim = m;
  p.in_domain = detail::all_positive;
  p.in_dual_domain = [](const Vector& e) { return (e.array() < 0.0).all(); };
  p.value = [](const Vector& t) { return -t.array().log().sum(); };
  p.grad = [](const Vector& t) -> Vector { return -t.cwiseInverse(); };
  p.grad_inv = [](const Vector& e) -> Vector { return -e.cwiseInverse(); };
  p.conjugate = [](const Vector& e) { return (-1.0 - (-e).array().log()).sum(); };
  p.hessian = [](const Vector& t) -> Matrix {
    return t.array().square().inverse().matrix().asDiagonal();
  };
  // Itakura-Saito, accumulated in extended precision.
  p.divergence = [](const Vector& a, const Vector& b) {
    long double s = 0.0L;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const long double r = static_cast<long double>(a[i]) / b[i];
      s += r - 1.0L - std::log(r);
    }
    return static_cast<double>(s);
  };
  p.interior_point = Vector::Ones(m);
  return LegendreGenerator(std::move(p));
}

LegendreGenerator make_logdet(int d) {
  if (d < 1) throw ValidationError("logdet: matrix dimension must be >= 1");
  const int n = packed_size(d);
  GeneratorParts p;
  p.name = "logdet";
  p.dim = n;
  p.in_domain = [d](const Vector& v) { return detail::is_spd(unpack_symmetric(v, d)); };
  p.in_dual_domain = [d](const Vector& v) { return detail::is_spd(-unpack_symmetric(v, d)); };
  p.value = [d](const Vector& v) { return -detail::spd_log_det(unpack_symmetric(v, d)); };
  p.grad = [d](const Vector& v) -> Vector {
    return pack_symmetric(-detail::spd_inverse(unpack_symmetric(v, d)));
  };
  p.grad_inv = [d](const Vector& v) -> Vector {
    return pack_symmetric(detail::spd_inverse(-unpack_symmetric(v, d)));
  };
  p.conjugate = [d](const Vector& v) {
    return -static_cast<double>(d) - detail::spd_log_det(-unpack_symmetric(v, d));
  };
  // d^2 F[E_k, E_l] = tr(Theta^{-1} E_k Theta^{-1} E_l) over the packed basis.
  p.hessian = [d, n](const Vector& v) -> Matrix {
    const Matrix inv = detail::spd_inverse(unpack_symmetric(v, d));
    std::vector<Matrix> prod(n);
    for (int k = 0; k < n; ++k) prod[k] = inv * unpack_symmetric(Vector::Unit(n, k), d);
    Matrix h(n, n);
    for (int k = 0; k < n; ++k) {
      for (int l = k; l < n; ++l) h(k, l) = h(l, k) = (prod[k] * prod[l]).trace();
    }
    return h;
  };
  p.interior_point = pack_symmetric(Matrix::Identity(d, d));
  return LegendreGenerator(std::move(p));
}

LegendreGenerator make_shannon_simplex(int m) {
  if (m < 2) throw ValidationError("shannon-simplex: need at least 2 categories");
  const int k = m - 1;
  GeneratorParts p;
  p.name = "shannon-simplex";
  p.dim = k;
  p.in_domain = [](const Vector& a) {
    return (a.array() > detail::kInteriorMargin).all() &&
           1.0 - a.sum() > detail::kInteriorMargin;
  };
  p.in_closure = [](const Vector& a) { return (a.array() >= 0.0).all() && a.sum() <= 1.0; };
  p.in_dual_domain = [](const Vector&) { return true; };
  p.value = [](const Vector& a) {
    double s = detail::xlogx(std::max(0.0, 1.0 - a.sum()));
    for (double x : a) s += detail::xlogx(x);
    return s;
  };
  p.grad = [](const Vector& a) -> Vector {
    const double last = 1.0 - a.sum();
    return (a.array() / last).log();
  };
  p.grad_inv = [](const Vector& e) -> Vector {
    const double shift = std::max(0.0, e.maxCoeff());
    const Vector ex = (e.array() - shift).exp();
    return ex / (std::exp(-shift) + ex.sum());
  };
  p.conjugate = [](const Vector& e) {
    const double shift = std::max(0.0, e.maxCoeff());
    return shift + std::log(std::exp(-shift) + (e.array() - shift).exp().sum());
  };
  p.hessian = [k](const Vector& a) -> Matrix {
    const double last = 1.0 - a.sum();
    Matrix h = Matrix::Constant(k, k, 1.0 / last);
    h.diagonal() += a.cwiseInverse();
    return h;
  };
  p.interior_point = Vector::Constant(k, 1.0 / m);
  return LegendreGenerator(std::move(p));
}

LegendreGenerator make_gaussian_cumulant(int d) {
  if (d < 1) throw ValidationError("gaussian: dimension must be >= 1");
  const int n = d + packed_size(d);
  const double dd = d;
  GeneratorParts p;
  p.name = "gaussian";
  p.dim = n;
  auto theta2 = [d, n](const Vector& v) { return unpack_symmetric(v.segment(d, n - d), d); };
  p.in_domain = [theta2](const Vector& v) { return detail::is_spd(theta2(v)); };
  // eta = (mu, pack(-(Sigma + mu mu^T))); the dual domain is Sigma SPD.
  p.in_dual_domain = [d, theta2](const Vector& v) {
    const Vector mu = v.head(d);
    return detail::is_spd(-theta2(v) - mu * mu.transpose());
  };
  p.value = [d, dd, theta2](const Vector& v) {
    const Matrix t2 = theta2(v);
    const Vector t1 = v.head(d);
    const Matrix inv = detail::spd_inverse(t2);
    return 0.5 * (dd * std::log(std::numbers::pi) - detail::spd_log_det(t2) +
                  0.5 * t1.dot(inv * t1));
  };
  p.grad = [d, n, theta2](const Vector& v) -> Vector {
    const Matrix inv = detail::spd_inverse(theta2(v));
    const Vector t1 = v.head(d);
    const Vector u = inv * t1;
    Vector g(n);
    g.head(d) = 0.5 * u;
    g.tail(n - d) = pack_symmetric(-0.5 * inv - 0.25 * u * u.transpose());
    return g;
  };
  p.grad_inv = [d, n, theta2](const Vector& v) -> Vector {
    const Vector mu = v.head(d);
    const Matrix sigma = -theta2(v) - mu * mu.transpose();
    const Matrix prec = detail::spd_inverse(sigma);
    Vector t(n);
    t.head(d) = prec * mu;
    t.tail(n - d) = pack_symmetric(0.5 * prec);
    return t;
  };
  p.conjugate = [d, dd, theta2](const Vector& v) {
    const Vector mu = v.head(d);
    const Matrix sigma = -theta2(v) - mu * mu.transpose();
    return -0.5 * (dd * (1.0 + std::log(2.0 * std::numbers::pi)) + detail::spd_log_det(sigma));
  };
  Vector start(n);
  start.head(d).setZero();
  start.tail(n - d) = pack_symmetric(0.5 * Matrix::Identity(d, d));
  p.interior_point = start;
  return LegendreGenerator(std::move(p));
}

// ---------------------------------------------------------------------------
// Alpha-embedding potential

double alpha_potential(double alpha, double y) {
  const double a = detail::route_alpha(alpha);
  if (a == -1.0) {
    if (y < 0.0) throw DomainError("alpha potential (alpha=-1): y must be >= 0");
    return detail::xlogx(y) - y;
  }
  if (a == 1.0) return std::exp(y);
  const double p = 0.5 * (1.0 - a);
  const double base = p * y;
  if (!(base >= 0.0)) throw DomainError("alpha potential: (1-alpha)/2 * y must be >= 0");
  return 2.0 / (1.0 + a) * std::pow(base, 1.0 / p);
}

LegendreGenerator make_alpha_generator(double alpha, int m) {
  if (m < 1) throw ValidationError("alpha generator: dimension must be >= 1");
  if (!std::isfinite(alpha)) throw ValidationError("alpha must be finite");
  const double a = detail::route_alpha(alpha);
  const double c = detail::alpha_offset(a);
  GeneratorParts p;
  p.name = "alpha";
  p.dim = m;
  p.interior_point = Vector::Zero(m);  // r_alpha(1) = 0

  if (a == -1.0) {
    // y log y - y on y = r + 1 > 0.
    p.in_domain = [c](const Vector& r) { return ((r.array() + c) > detail::kInteriorMargin).all(); };
    p.in_closure = [c](const Vector& r) { return ((r.array() + c) >= 0.0).all(); };
    p.in_dual_domain = [](const Vector&) { return true; };
    p.value = [c](const Vector& r) {
      double s = 0.0;
      for (double x : r) s += detail::xlogx(x + c) - (x + c);
      return s;
    };
    p.grad = [c](const Vector& r) -> Vector { return (r.array() + c).log(); };
    p.grad_inv = [c](const Vector& e) -> Vector { return e.array().exp() - c; };
    p.conjugate = [c](const Vector& e) { return e.array().exp().sum() - c * e.sum(); };
    p.hessian = [c](const Vector& r) -> Matrix {
      return (r.array() + c).inverse().matrix().asDiagonal();
    };
  } else if (a == 1.0) {
    p.in_domain = [](const Vector&) { return true; };
    p.in_dual_domain = detail::all_positive;
    p.value = [](const Vector& r) { return r.array().exp().sum(); };
    p.grad = [](const Vector& r) -> Vector { return r.array().exp(); };
    p.grad_inv = [](const Vector& e) -> Vector { return e.array().log(); };
    p.conjugate = [](const Vector& e) {
      double s = 0.0;
      for (double x : e) s += detail::xlogx(x) - x;
      return s;
    };
    p.hessian = [](const Vector& r) -> Matrix { return r.array().exp().matrix().asDiagonal(); };
  } else {
    // phi(y) = (1/s) (p y)^{1/p}, phi'(y) = (1/s) (p y)^{s/p}, phi''(y) = (p y)^{1/p - 2},
    // with p = (1-alpha)/2, s = (1+alpha)/2. The dual domain is s * eta > 0.
    const double pp = 0.5 * (1.0 - a);
    const double ss = 0.5 * (1.0 + a);
    p.in_domain = [pp, c](const Vector& r) {
      return ((pp * (r.array() + c)) > detail::kInteriorMargin).all();
    };
    p.in_closure = [pp, c](const Vector& r) { return ((pp * (r.array() + c)) >= 0.0).all(); };
    p.in_dual_domain = [ss](const Vector& e) { return ((ss * e.array()) > 0.0).all(); };
    p.value = [pp, ss, c](const Vector& r) {
      return ((pp * (r.array() + c)).pow(1.0 / pp) / ss).sum();
    };
    p.grad = [pp, ss, c](const Vector& r) -> Vector {
      return (pp * (r.array() + c)).pow(ss / pp) / ss;
    };
    p.grad_inv = [pp, ss, c](const Vector& e) -> Vector {
      return (ss * e.array()).pow(pp / ss) / pp - c;
    };
    p.conjugate = [pp, ss, c](const Vector& e) {
      // phi*(eta) = (1/p) (s eta)^{1/s}; shifted by -c eta.
      return ((ss * e.array()).pow(1.0 / ss) / pp).sum() - c * e.sum();
    };
    p.hessian = [pp, c](const Vector& r) -> Matrix {
      return (pp * (r.array() + c)).pow(1.0 / pp - 2.0).matrix().asDiagonal();
    };
  }
  return LegendreGenerator(std::move(p));
}

// ---------------------------------------------------------------------------
// Conjugate, AWQ lifting, weighted separable

LegendreGenerator conjugate_generator(const LegendreGenerator& g) {
  GeneratorParts p;
  p.name = "conjugate(" + g.name() + ")";
  p.dim = g.dim();
  p.in_domain = [g](const Vector& e) { return g.dual_contains(e); };
  p.in_dual_domain = [g](const Vector& t) { return g.contains(t); };
  p.value = [g](const Vector& e) { return g.conjugate_value(e); };
  p.grad = [g](const Vector& e) { return g.grad_inv(e); };
  p.grad_inv = [g](const Vector& t) { return g.grad(t); };
  p.conjugate = [g](const Vector& t) { return g.value(t); };
  p.hessian = [g](const Vector& e) -> Matrix {
    const Matrix h = g.hessian(g.grad_inv(e));
    Matrix inv = h.ldlt().solve(Matrix::Identity(h.rows(), h.cols()));
    return 0.5 * (inv + inv.transpose());
  };
  p.interior_point = g.grad(g.interior_point());
  return LegendreGenerator(std::move(p));
}

LegendreGenerator make_awq_lifted(const LegendreGenerator& base, double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw ValidationError("awq: alpha and beta must be non-negative");
  }
  const int m = base.dim();
  const LegendreGenerator dual = conjugate_generator(base);
  GeneratorParts p;
  p.name = "awq(" + base.name() + ")";
  p.dim = 2 * m;
  p.in_domain = [base, dual, m](const Vector& x) {
    return base.contains(x.head(m)) && dual.contains(x.tail(m));
  };
  p.in_dual_domain = [base, dual, m, alpha, beta](const Vector& y) {
    const bool first = alpha > 0.0 ? true : dual.contains(y.head(m));
    const bool second = beta > 0.0 ? true : base.contains(y.tail(m));
    return first && second;
  };
  auto block_value = [](const LegendreGenerator& g, double w, const Vector& x) {
    return g.value(x) + 0.5 * w * x.squaredNorm();
  };
  p.value = [=](const Vector& x) {
    return block_value(base, alpha, x.head(m)) + block_value(dual, beta, x.tail(m));
  };
  p.grad = [base, dual, m, alpha, beta](const Vector& x) -> Vector {
    Vector g(2 * m);
    g.head(m) = base.grad(x.head(m)) + alpha * x.head(m);
    g.tail(m) = dual.grad(x.tail(m)) + beta * x.tail(m);
    return g;
  };
  // Inverts grad G + w x for one block by minimizing G(x) + w/2 |x|^2 - <x, y>.
  auto block_inverse = [](const LegendreGenerator& g, double w, const Vector& y) -> Vector {
    if (w == 0.0) return g.grad_inv(y);
    const int k = g.dim();
    return minimize_convex_newton(
        [&](const Vector& x) { return g.value(x) + 0.5 * w * x.squaredNorm() - x.dot(y); },
        [&](const Vector& x) -> Vector { return g.grad(x) + w * x - y; },
        [&](const Vector& x) -> Matrix { return g.hessian(x) + w * Matrix::Identity(k, k); },
        [&](const Vector& x) { return g.contains(x); }, g.interior_point());
  };
  p.grad_inv = [=](const Vector& y) -> Vector {
    Vector x(2 * m);
    x.head(m) = block_inverse(base, alpha, y.head(m));
    x.tail(m) = block_inverse(dual, beta, y.tail(m));
    return x;
  };
  p.conjugate = [=](const Vector& y) {
    Vector x(2 * m);
    x.head(m) = block_inverse(base, alpha, y.head(m));
    x.tail(m) = block_inverse(dual, beta, y.tail(m));
    return x.dot(y) - (block_value(base, alpha, x.head(m)) + block_value(dual, beta, x.tail(m)));
  };
  p.hessian = [base, dual, m, alpha, beta](const Vector& x) -> Matrix {
    Matrix h = Matrix::Zero(2 * m, 2 * m);
    h.topLeftCorner(m, m) = base.hessian(x.head(m)) + alpha * Matrix::Identity(m, m);
    h.bottomRightCorner(m, m) = dual.hessian(x.tail(m)) + beta * Matrix::Identity(m, m);
    return h;
  };
  Vector start(2 * m);
  start.head(m) = base.interior_point();
  start.tail(m) = dual.interior_point();
  p.interior_point = start;
  return LegendreGenerator(std::move(p));
}

LegendreGenerator make_weighted_separable(const LegendreGenerator& f, const Vector& coeffs) {
  if (f.dim() != 1) throw ValidationError("weighted separable: scalar generator required");
  if (coeffs.size() < 1 || !(coeffs.array() > 0.0).all() || !coeffs.allFinite()) {
    throw ValidationError("weighted separable: coefficients must be positive and finite");
  }
  const int m = static_cast<int>(coeffs.size());
  auto each = [](const Vector& x, auto&& pred) {
    for (double v : x) {
      if (!pred(Vector::Constant(1, v))) return false;
    }
    return true;
  };
  GeneratorParts p;
  p.name = "separable(" + f.name() + ")";
  p.dim = m;
  p.in_domain = [f, each](const Vector& x) {
    return each(x, [&](const Vector& v) { return f.contains(v); });
  };
  p.in_closure = [f, each](const Vector& x) {
    return each(x, [&](const Vector& v) { return f.closure_contains(v); });
  };
  p.in_dual_domain = [f, coeffs, m](const Vector& e) {
    for (int i = 0; i < m; ++i) {
      if (!f.dual_contains(Vector::Constant(1, e[i] / coeffs[i]))) return false;
    }
    return true;
  };
  p.value = [f, coeffs, m](const Vector& x) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += coeffs[i] * f.value(Vector::Constant(1, x[i]));
    return s;
  };
  p.grad = [f, coeffs, m](const Vector& x) -> Vector {
    Vector g(m);
    for (int i = 0; i < m; ++i) g[i] = coeffs[i] * f.grad(Vector::Constant(1, x[i]))[0];
    return g;
  };
  p.grad_inv = [f, coeffs, m](const Vector& e) -> Vector {
    Vector x(m);
    for (int i = 0; i < m; ++i) x[i] = f.grad_inv(Vector::Constant(1, e[i] / coeffs[i]))[0];
    return x;
  };
  p.conjugate = [f, coeffs, m](const Vector& e) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
      s += coeffs[i] * f.conjugate_value(Vector::Constant(1, e[i] / coeffs[i]));
    }
    return s;
  };
  p.hessian = [f, coeffs, m](const Vector& x) -> Matrix {
    Vector d(m);
    for (int i = 0; i < m; ++i) d[i] = coeffs[i] * f.hessian(Vector::Constant(1, x[i]))(0, 0);
    return d.asDiagonal();
  };
  p.interior_point = Vector::Constant(m, f.interior_point()[0]);
  return LegendreGenerator(std::move(p));
}

}  // namespace bregman
