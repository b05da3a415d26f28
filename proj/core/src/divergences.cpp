#include "bregman/divergences.hpp"

#include <cmath>

#include "detail.hpp"

namespace bregman {

namespace {

double clamp_roundoff(double v, double scale) {
  return (v < 0.0 && v > -1e-12 * (1.0 + scale)) ? 0.0 : v;
}

void check_pair(const LegendreGenerator& g, const Vector& a, const Vector& b, const char* what) {
  require_same_size(a, b, what);
  if (a.size() != g.dim()) {
    throw ValidationError(std::string(what) + ": dimension " + std::to_string(a.size()) +
                          " does not match generator dimension " + std::to_string(g.dim()));
  }
}

}  // namespace

double bregman(const LegendreGenerator& g, const Vector& theta1, const Vector& theta2) {
  check_pair(g, theta1, theta2, "bregman");
  if (const auto& direct = g.parts().divergence) {
    if (!g.closure_contains(theta1) || !g.contains(theta2)) {
      throw DomainError("point outside the domain of generator '" + g.name() + "'");
    }
    return direct(theta1, theta2);
  }
  const double f1 = g.value(theta1);
  const double f2 = g.value(theta2);
  const Vector eta2 = g.grad(theta2);
  const double v = f1 - f2 - (theta1 - theta2).dot(eta2);
  return clamp_roundoff(v, std::abs(f1) + std::abs(f2));
}

double fenchel_young(const LegendreGenerator& g, const Vector& theta, const Vector& eta) {
  check_pair(g, theta, eta, "fenchel_young");
  const double f = g.value(theta);
  const double fs = g.conjugate_value(eta);
  return clamp_roundoff(f + fs - theta.dot(eta), std::abs(f) + std::abs(fs));
}

// ---------------------------------------------------------------------------
// Curved models

bool CurvedModel::contains(const Vector& u) const {
  return u.size() == u_dim && u.allFinite() && (!in_domain || in_domain(u));
}

Vector CurvedModel::theta(const Vector& u) const {
  if (u.size() != u_dim) {
    throw ValidationError("curved model '" + name + "': expected parameter dimension " +
                          std::to_string(u_dim));
  }
  require_finite(u, "curved model");
  if (in_domain && !in_domain(u)) {
    throw DomainError("curved model '" + name + "': parameter outside the model domain");
  }
  return embed(u);
}

CurvedModel make_ellipse_model(double a, double b, const Vector& center) {
  if (!(a > 0.0) || !(b > 0.0)) throw ValidationError("ellipse: semi-axes must be positive");
  if (center.size() != 2) throw ValidationError("ellipse: center must be 2-dimensional");
  CurvedModel m;
  m.name = "ellipse";
  m.u_dim = 1;
  m.theta_dim = 2;
  m.embed = [a, b, center](const Vector& u) -> Vector {
    Vector t(2);
    t << center[0] + a * std::cos(u[0]), center[1] + b * std::sin(u[0]);
    return t;
  };
  return m;
}

CurvedModel make_circle_model(double radius, const Vector& center) {
  CurvedModel m = make_ellipse_model(radius, radius, center);
  m.name = "circle";
  return m;
}

double curved_divergence(const LegendreGenerator& g, const CurvedModel& model, const Vector& u1,
                         const Vector& u2) {
  return bregman(g, model.theta(u1), model.theta(u2));
}

// ---------------------------------------------------------------------------
// Symmetrizations

double symmetrized(const LegendreGenerator& g, const Vector& theta1, const Vector& theta2) {
  check_pair(g, theta1, theta2, "symmetrized");
  // <t1 - t2, grad F(t1) - grad F(t2)> equals the sum of both sided divergences.
  const double v = (theta1 - theta2).dot(g.grad(theta1) - g.grad(theta2));
  return std::max(0.0, v);
}

double jensen(const LegendreGenerator& g, const Vector& theta1, const Vector& theta2) {
  check_pair(g, theta1, theta2, "jensen");
  const double f1 = g.value(theta1);
  const double f2 = g.value(theta2);
  const double v = 0.5 * (f1 + f2) - g.value(0.5 * (theta1 + theta2));
  return clamp_roundoff(v, std::abs(f1) + std::abs(f2));
}

double skew_jensen(const LegendreGenerator& g, double alpha, const Vector& theta_l,
                   const Vector& theta_r) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("skew_jensen: alpha must be in (0, 1)");
  check_pair(g, theta_l, theta_r, "skew_jensen");
  const double fl = g.value(theta_l);
  const double fr = g.value(theta_r);
  const double fm = g.value(alpha * theta_l + (1.0 - alpha) * theta_r);
  const double v = (alpha * fl + (1.0 - alpha) * fr - fm) / (alpha * (1.0 - alpha));
  return clamp_roundoff(v, (std::abs(fl) + std::abs(fr)) / (alpha * (1.0 - alpha)));
}

double awq_divergence(const LegendreGenerator& g, double alpha, double beta, const Vector& theta1,
                      const Vector& theta2) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw ValidationError("awq: alpha and beta must be non-negative");
  }
  check_pair(g, theta1, theta2, "awq_divergence");
  const Vector dt = theta2 - theta1;
  const Vector de = g.grad(theta2) - g.grad(theta1);
  return std::max(0.0, dt.dot(de)) + 0.5 * alpha * dt.squaredNorm() + 0.5 * beta * de.squaredNorm();
}

Vector awq_feature_map(const LegendreGenerator& g, double alpha, double beta, const Vector& theta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !(alpha * beta >= 1.0)) {
    throw ValidationError("awq feature map requires alpha > 0, beta > 0 and alpha * beta >= 1");
  }
  const int m = g.dim();
  const Vector eta = g.grad(theta);
  const double sa = std::sqrt(alpha);
  Vector phi(2 * m);
  phi.head(m) = sa * theta + eta / sa;
  phi.tail(m) = std::sqrt((alpha * beta - 1.0) / alpha) * eta;
  return phi;
}

double awq_matrix_divergence(const LegendreGenerator& g, const SpdMatrix& a, const SpdMatrix& b,
                             const Vector& theta1, const Vector& theta2) {
  check_pair(g, theta1, theta2, "awq_matrix_divergence");
  if (a.dim() != g.dim() || b.dim() != g.dim()) {
    throw ValidationError("awq_matrix_divergence: weight matrices must match the dimension");
  }
  const Vector dt = theta2 - theta1;
  const Vector de = g.grad(theta2) - g.grad(theta1);
  return std::max(0.0, dt.dot(de)) + 0.5 * dt.dot(a.matrix() * dt) + 0.5 * de.dot(b.matrix() * de);
}

// ---------------------------------------------------------------------------
// Pointwise

DiscreteDensity::DiscreteDensity(Vector v) : DiscreteDensity(v, Vector::Ones(v.size())) {}

DiscreteDensity::DiscreteDensity(Vector v, Vector mu) : values(std::move(v)), measure(std::move(mu)) {
  if (values.size() == 0) throw ValidationError("density: empty grid");
  require_same_size(values, measure, "density");
  require_finite(values, "density values");
  require_finite(measure, "density measure");
  if ((values.array() < 0.0).any()) throw DomainError("density: negative value");
  if ((measure.array() <= 0.0).any()) throw ValidationError("density: measure weights must be positive");
}

double pointwise_divergence(const LegendreGenerator& f, const Vector& w, const DiscreteDensity& p,
                            const DiscreteDensity& q) {
  if (f.dim() != 1) throw ValidationError("pointwise divergence: scalar generator required");
  if (p.size() != q.size() || w.size() != p.size()) {
    throw ValidationError("pointwise divergence: grid mismatch");
  }
  if ((p.measure - q.measure).cwiseAbs().maxCoeff() > 0.0) {
    throw ValidationError("pointwise divergence: densities use different measures");
  }
  require_finite(w, "pointwise weights");
  if ((w.array() < 0.0).any()) throw ValidationError("pointwise divergence: negative weight");
  if ((q.values.array() <= 0.0).any()) throw DomainError("pointwise divergence: q has zeros");
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    s += w[i] * p.measure[i] *
         bregman(f, Vector::Constant(1, p.values[i]), Vector::Constant(1, q.values[i]));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Gaussians

Vector gaussian_natural(const Vector& mu, const SpdMatrix& sigma) {
  const int d = sigma.dim();
  if (mu.size() != d) throw ValidationError("gaussian: mean and covariance dimensions differ");
  require_finite(mu, "gaussian mean");
  const Matrix prec = sigma.inverse().matrix();
  Vector theta(d + packed_size(d));
  theta.head(d) = prec * mu;
  theta.tail(packed_size(d)) = pack_symmetric(0.5 * prec);
  return theta;
}

std::pair<Vector, SpdMatrix> gaussian_moments(const Vector& theta, int d) {
  if (theta.size() != d + packed_size(d)) throw ValidationError("gaussian: parameter size mismatch");
  const Matrix half_prec = unpack_symmetric(theta.tail(packed_size(d)), d);
  const Matrix sigma = detail::spd_inverse(2.0 * half_prec);
  return {sigma * theta.head(d), SpdMatrix(sigma, 1e-8)};
}

double gaussian_kld(const Vector& mu1, const SpdMatrix& sigma1, const Vector& mu2,
                    const SpdMatrix& sigma2) {
  const int d = sigma1.dim();
  if (sigma2.dim() != d) throw ValidationError("gaussian_kld: dimension mismatch");
  const LegendreGenerator f = make_gaussian_cumulant(d);
  return bregman(f, gaussian_natural(mu2, sigma2), gaussian_natural(mu1, sigma1));
}

double gaussian_kld_closed_form(const Vector& mu1, const SpdMatrix& sigma1, const Vector& mu2,
                                const SpdMatrix& sigma2) {
  const int d = sigma1.dim();
  if (sigma2.dim() != d || mu1.size() != d || mu2.size() != d) {
    throw ValidationError("gaussian_kld: dimension mismatch");
  }
  const Matrix p2 = sigma2.inverse().matrix();
  const Vector dm = mu2 - mu1;
  return 0.5 * ((p2 * sigma1.matrix()).trace() + dm.dot(p2 * dm) - d + sigma2.log_det() -
                sigma1.log_det());
}

Vector realify_vector(const ComplexVector& z) {
  require_same_size(z.re, z.im, "realify_vector");
  Vector out(2 * z.re.size());
  out << z.re, z.im;
  return out;
}

Matrix realify_matrix(const ComplexMatrix& m) {
  if (m.re.rows() != m.im.rows() || m.re.cols() != m.im.cols()) {
    throw ValidationError("realify_matrix: real and imaginary parts differ in shape");
  }
  const Eigen::Index r = m.re.rows();
  const Eigen::Index c = m.re.cols();
  Matrix out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = m.re;
  out.topRightCorner(r, c) = -m.im;
  out.bottomLeftCorner(r, c) = m.im;
  out.bottomRightCorner(r, c) = m.re;
  return out;
}

std::pair<Vector, SpdMatrix> realify_complex(const ComplexVector& mean, const ComplexMatrix& cov) {
  const Eigen::Index d = mean.re.size();
  if (cov.re.rows() != d || cov.re.cols() != d) {
    throw ValidationError("realify_complex: mean and covariance dimensions differ");
  }
  const double scale = std::max(1.0, cov.re.cwiseAbs().maxCoeff());
  if ((cov.re - cov.re.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale ||
      (cov.im + cov.im.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw DomainError("realify_complex: covariance is not Hermitian");
  }
  return {realify_vector(mean), SpdMatrix(0.5 * realify_matrix(cov))};
}

}  // namespace bregman
