#pragma once

#include <cstdint>
#include <vector>

#include "bregman/divergences.hpp"

namespace bregman {

/// n >= 1 points of equal dimension with positive weights summing to 1
/// (within 1e-12).
class WeightedParamSet {
 public:
  WeightedParamSet(std::vector<Vector> points, Vector weights);

  /// Equal weights 1/n.
  static WeightedParamSet uniform(std::vector<Vector> points);
  /// Divides positive weights by their sum.
  static WeightedParamSet normalized(std::vector<Vector> points, const Vector& raw_weights);
  /// Scalars as 1-dimensional points.
  static WeightedParamSet scalars(const std::vector<double>& values, const Vector& raw_weights);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  int dim() const noexcept { return static_cast<int>(points_.front().size()); }
  const std::vector<Vector>& points() const noexcept { return points_; }
  const Vector& weights() const noexcept { return weights_; }
  const Vector& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
  double weight(int i) const { return weights_[i]; }

  /// Same weights, points mapped through f.
  WeightedParamSet map(const VectorFn& f) const;

 private:
  std::vector<Vector> points_;
  Vector weights_;
};

/// Weighted arithmetic mean sum w_i theta_i.
Vector right_centroid(const WeightedParamSet& set);

/// (grad F)^{-1}(sum w_i grad F(theta_i)).
Vector left_centroid(const LegendreGenerator& g, const WeightedParamSet& set);

/// Solves grad Fbar(theta) = sum w_i grad F_i(theta_i) with Fbar = sum w_i F_i
/// by damped Newton from the arithmetic mean. One generator per point.
Vector generalized_left_centroid(const std::vector<LegendreGenerator>& gens,
                                 const WeightedParamSet& set, const NewtonOptions& opts = {});

/// sum w_i B_F(theta_i : theta_bar).
double bregman_information(const LegendreGenerator& g, const WeightedParamSet& set);
/// sum w_i F(theta_i) - F(theta_bar).
double jensen_diversity(const LegendreGenerator& g, const WeightedParamSet& set);

struct BiasVariance {
  double info;  // sum w_i B_F(theta_i : theta_bar)
  double bias;  // B_F(theta_bar : theta)
};

/// sum w_i B_F(theta_i : theta) = info + bias.
BiasVariance bias_variance(const LegendreGenerator& g, const WeightedParamSet& set,
                           const Vector& theta);

/// sum w_i B_F(theta_i : theta) - B_F(theta_bar : theta). Constant in theta.
double projection_gap(const LegendreGenerator& g, const WeightedParamSet& set, const Vector& theta);

// -- curved centroids ---------------------------------------------------------

struct CurvedSearchOptions {
  int perturbations = 8;        // extra starts besides init
  double perturbation_scale = 1.0;  // starts are init + scale * U(-pi, pi) per coordinate
  std::uint64_t seed = 0;
  int max_iter = 2000;
  double grad_tol = 1e-11;
  double flat_tol = 1e-8;       // gradient norm below which a sample counts as flat
  int flat_samples = 16;
};

/// Local minimizer over u of B_F(target : theta(u)), best of several starts.
/// Throws AmbiguityError when the objective is flat along every axis around
/// the minimizer (non-unique projection).
Vector curved_projection(const LegendreGenerator& g, const CurvedModel& model, const Vector& target,
                         const Vector& init, const CurvedSearchOptions& opts = {});

/// Right centroid restricted to a curved model: the projection of the mean of
/// theta(u_i). `set` holds the u_i.
Vector curved_centroid(const LegendreGenerator& g, const CurvedModel& model,
                       const WeightedParamSet& set, const Vector& init,
                       const CurvedSearchOptions& opts = {});

/// Projection of the mixture sum w_i p_i onto a family of grid densities under
/// the pointwise divergence with scalar generator f and weight function w.
Vector pointwise_curved_centroid(const LegendreGenerator& f, const Vector& w,
                                 const std::vector<DiscreteDensity>& densities,
                                 const Vector& weights, const CurvedModel& family,
                                 const Vector& init, const CurvedSearchOptions& opts = {});

// -- symmetrized centroids ----------------------------------------------------

/// sum w_i S(theta_i, theta) for the extended KL generator (Jeffreys objective).
double jeffreys_objective(const WeightedParamSet& set, const Vector& theta);

/// theta = a / W(a e / g) with a, g the weighted arithmetic and geometric means.
double jeffreys_centroid_1d(const WeightedParamSet& set);

/// Jeffreys centroid of categorical distributions given as full probability
/// vectors: theta_j = a_j / W((a_j / g_j) e^{1 + lambda}) with lambda chosen
/// so that theta sums to one.
Vector jeffreys_centroid_categorical(const WeightedParamSet& set);

/// sqrt(a h), a and h the weighted arithmetic and harmonic means.
double cosh_centroid(const WeightedParamSet& set);

/// Weighted arithmetic and harmonic means of SPD matrices.
SpdMatrix matrix_arithmetic_mean(const std::vector<SpdMatrix>& mats, const Vector& weights);
SpdMatrix matrix_harmonic_mean(const std::vector<SpdMatrix>& mats, const Vector& weights);

/// Minimizer of sum w_i S_logdet(C, M_i): the matrix geometric mean
/// H^{1/2} (H^{-1/2} A H^{-1/2})^{1/2} H^{1/2} of the harmonic mean H and the
/// arithmetic mean A.
SpdMatrix logdet_cosh_centroid(const std::vector<SpdMatrix>& mats, const Vector& weights);

/// sum w_i [tr(C M_i^{-1}) + tr(M_i C^{-1}) - 2d].
double logdet_cosh_objective(const std::vector<SpdMatrix>& mats, const Vector& weights,
                             const Matrix& c);

// -- CCCP -----------------------------------------------------------------------

enum class CccpMode { primal, dual, mixed };

struct CccpConfig {
  double epsilon = 1e-4;
  int max_rounds = 1000;
  double convergence_tol = 1e-12;
  CccpMode mode = CccpMode::primal;
  /// Extrapolated steps (with monotone backtracking to the plain update).
  bool accelerate = true;

  void validate() const;
};

struct CccpResult {
  Vector theta;                     // final iterate, primal coordinates
  std::vector<Vector> trace;        // iterates in primal coordinates, starting point first
  std::vector<double> objectives;   // objective of the mode in use at each trace entry
  int rounds = 0;
  bool converged = false;
};

/// sum w_i Jbar^s_{F,eps}(theta_i, theta), the symmetric scaled skew Jensen
/// objective minimized by CCCP.
double cccp_objective(const LegendreGenerator& g, const WeightedParamSet& set,
                      const Vector& theta, double epsilon);

/// Approximate Jeffreys-Bregman centroid by the convex-concave procedure on
/// the symmetric eps-Jensen objective, started at the arithmetic mean (dual
/// mode: at the dual arithmetic mean). Dual mode runs the primal iteration
/// for F* on the gradient points.
CccpResult cccp_symmetrized_centroid(const LegendreGenerator& g, const WeightedParamSet& set,
                                     const CccpConfig& config = {});

}  // namespace bregman
