#pragma once

#include <vector>

#include "bregman/divergences.hpp"

namespace bregman {

enum class SphereSide { right, left };

/// Right sphere {t : B_F(t : center) = r} or left sphere {t : B_F(center : t) = r}.
struct BregmanSphere {
  LegendreGenerator generator;
  Vector center;
  double radius;
  SphereSide side;

  /// Validates that the center is interior and the radius is finite and >= 0.
  BregmanSphere(LegendreGenerator g, Vector center, double radius,
                SphereSide side = SphereSide::right);

  /// Signed residual of the defining equation at t.
  double residual(const Vector& t) const;
};

/// Non-vertical hyperplane y = <a, t> + b in R^{m+1}.
struct LiftedHyperplane {
  Vector normal_a;
  double offset_b;
};

/// a = grad F(c), b = F(c) + r - <c, grad F(c)>. Right spheres only.
LiftedHyperplane lift_sphere(const BregmanSphere& s);

/// Sphere cut out of the potential graph by h: center (grad F)^{-1}(a) and
/// radius <a, center> - F(center) + b. Radii in [-tol, 0) are clamped to 0;
/// below -tol the plane misses the graph and EmptySphereError is thrown.
BregmanSphere hyperplane_to_sphere(const LegendreGenerator& g, const LiftedHyperplane& h,
                                   double tol = 1e-12);

/// Right sphere of F* centered at grad F(c) with the same radius. A point t
/// lies on the left sphere iff grad F(t) lies on the returned sphere.
BregmanSphere dual_sphere(const BregmanSphere& left);

struct IntersectionResult {
  /// Intersection points, ordered by the flat parameter.
  std::vector<Vector> points;
  /// residuals[k][i]: residual of sphere i at points[k].
  std::vector<std::vector<double>> residuals;
  /// Solution flat of the radical equations: origin + span(directions).
  Vector flat_origin;
  Matrix flat_directions;
  /// False when the flat has too many free dimensions to list points.
  bool enumerable = true;
  /// False when the radical equations have no solution.
  bool consistent = true;
};

/// Intersection of right spheres sharing one generator. The pairwise
/// hyperplane differences give linear equations <a_i - a_1, t> = b_1 - b_i;
/// on their solution flat the first sphere equation is solved by bracketing
/// over `grid` samples. Points are listed when the flat has dimension <= 1.
IntersectionResult intersect_right_spheres(const LegendreGenerator& g,
                                           const std::vector<BregmanSphere>& spheres,
                                           int grid = 256);

/// Left spheres, handled through dual_sphere. The flat is reported in dual
/// (gradient) coordinates; points are returned in primal coordinates.
IntersectionResult intersect_left_spheres(const LegendreGenerator& g,
                                          const std::vector<BregmanSphere>& spheres,
                                          int grid = 256);

/// Sphere {q > 0 : D_alpha(q : center) = radius} of the extended alpha-divergence.
struct AlphaSphere {
  Vector center;
  double radius;
};

/// Intersection of alpha-divergence spheres, computed in alpha-representation
/// coordinates with the generator F_alpha and mapped back to positive
/// measures. With `simplex_constraint`, only points with sum(q) = 1 are kept;
/// a two-dimensional flat is then reduced to a curve by tracing rays from an
/// interior point of the constraint set (exact for alpha >= -1, where that set
/// is convex). Residuals are D_alpha(q : q_i) - r_i.
IntersectionResult alpha_sphere_intersection(double alpha, const std::vector<AlphaSphere>& spheres,
                                             bool simplex_constraint, int grid = 256);

}  // namespace bregman
