#include <cmath>
#include <limits>

#include "bregman/centroids.hpp"

namespace bregman {

void CccpConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw ValidationError("cccp: epsilon must be in (0, 0.5)");
  if (max_rounds < 1) throw ValidationError("cccp: max_rounds must be >= 1");
  if (!(convergence_tol > 0.0)) throw ValidationError("cccp: convergence_tol must be positive");
}

namespace {

struct Objective {
  double value;
  double noise;  // round-off scale of `value`
};

Objective objective_with_noise(const LegendreGenerator& g, const WeightedParamSet& set,
                               const Vector& theta, double eps) {
  const double scale = 1.0 / (eps * (1.0 - eps));
  const double f = g.value(theta);
  double s = 0.0;
  double mag = 0.0;
  for (int i = 0; i < set.size(); ++i) {
    const Vector& t = set.point(i);
    const double fi = g.value(t);
    const double f1 = g.value(eps * t + (1.0 - eps) * theta);
    const double f2 = g.value((1.0 - eps) * t + eps * theta);
    s += set.weight(i) * (fi + f - f1 - f2);
    mag += set.weight(i) * (std::abs(fi) + std::abs(f) + std::abs(f1) + std::abs(f2));
  }
  return {scale * s, 64.0 * std::numeric_limits<double>::epsilon() * scale * mag};
}

// One convex-concave step. The plain update solves
//   grad F(theta+) = sum w_i [(1-e) grad F(e t_i + (1-e) theta) + e grad F((1-e) t_i + e theta)].
// With acceleration, the dual displacement is first stretched by
// 1 / (2 e (1-e)), which is exact for quadratic F, and halved until the
// objective is no worse than after the plain step.
struct Step {
  Vector theta;
  Objective objective;
};

Step cccp_step(const LegendreGenerator& g, const WeightedParamSet& set, const Vector& theta,
               double eps, bool accelerate) {
  Vector target = Vector::Zero(theta.size());
  for (int i = 0; i < set.size(); ++i) {
    const Vector& t = set.point(i);
    target += set.weight(i) * ((1.0 - eps) * g.grad(eps * t + (1.0 - eps) * theta) +
                               eps * g.grad((1.0 - eps) * t + eps * theta));
  }
  const Vector plain = g.grad_inv(target);
  const Objective plain_obj = objective_with_noise(g, set, plain, eps);
  if (!accelerate) return {plain, plain_obj};

  const Vector eta = g.grad(theta);
  for (double kappa = 1.0 / (2.0 * eps * (1.0 - eps)); kappa > 1.0; kappa *= 0.5) {
    const Vector e = eta + kappa * (target - eta);
    if (!g.dual_contains(e)) continue;
    try {
      const Vector cand = g.grad_inv(e);
      if (!g.contains(cand)) continue;
      const Objective obj = objective_with_noise(g, set, cand, eps);
      if (obj.value <= plain_obj.value + plain_obj.noise) return {cand, obj};
    } catch (const Error&) {
      // fall through to a shorter extrapolation
    }
  }
  return {plain, plain_obj};
}

bool close_enough(const Vector& a, const Vector& b, double tol) {
  return (a - b).norm() <= tol * (1.0 + b.norm());
}

}  // namespace

double cccp_objective(const LegendreGenerator& g, const WeightedParamSet& set, const Vector& theta,
                      double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("cccp objective: epsilon in (0, 1)");
  if (g.dim() != set.dim() || theta.size() != g.dim()) {
    throw ValidationError("cccp objective: dimension mismatch");
  }
  return objective_with_noise(g, set, theta, epsilon).value;
}

CccpResult cccp_symmetrized_centroid(const LegendreGenerator& g, const WeightedParamSet& set,
                                     const CccpConfig& config) {
  config.validate();
  if (g.dim() != set.dim()) throw ValidationError("cccp: generator and points differ in dimension");
  for (const Vector& p : set.points()) {
    if (!g.contains(p)) throw DomainError("cccp: point outside the open domain");
  }
  const double eps = config.epsilon;
  const bool acc = config.accelerate;

  CccpResult res;
  const LegendreGenerator dual_g = conjugate_generator(g);
  const WeightedParamSet dual_set = set.map([&](const Vector& t) { return g.grad(t); });

  Vector theta;
  if (config.mode == CccpMode::dual) {
    theta = g.grad_inv(right_centroid(dual_set));
    res.objectives.push_back(cccp_objective(dual_g, dual_set, g.grad(theta), eps));
  } else {
    theta = right_centroid(set);
    res.objectives.push_back(cccp_objective(g, set, theta, eps));
  }
  res.trace.push_back(theta);

  try {
    for (int round = 1; round <= config.max_rounds; ++round) {
      Vector next;
      double obj = 0.0;
      switch (config.mode) {
        case CccpMode::primal: {
          const Step s = cccp_step(g, set, theta, eps, acc);
          next = s.theta;
          obj = s.objective.value;
          break;
        }
        case CccpMode::dual: {
          const Step s = cccp_step(dual_g, dual_set, g.grad(theta), eps, acc);
          next = g.grad_inv(s.theta);
          obj = s.objective.value;
          break;
        }
        case CccpMode::mixed: {
          const Step p = cccp_step(g, set, theta, eps, acc);
          const Step d = cccp_step(dual_g, dual_set, g.grad(p.theta), eps, acc);
          next = g.grad_inv(d.theta);
          obj = cccp_objective(g, set, next, eps);
          break;
        }
      }
      res.rounds = round;
      res.trace.push_back(next);
      res.objectives.push_back(obj);
      const bool done = close_enough(next, theta, config.convergence_tol);
      theta = next;
      if (done) {
        res.converged = true;
        break;
      }
    }
  } catch (const DomainError& e) {
    throw ConvergenceError(std::string("cccp: iterate left the domain: ") + e.what(), theta, res.trace);
  }
  res.theta = theta;
  return res;
}

}  // namespace bregman
