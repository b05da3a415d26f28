#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bregman/centroids.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace bregman;
namespace ts = testing_support;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Vector scalar(double x) { return Vector::Constant(1, x); }

WeightedParamSet pair12() { return WeightedParamSet::uniform({scalar(1), scalar(2)}); }

}  // namespace

TEST(WeightedSet, Validation) {
  EXPECT_THROW(WeightedParamSet({scalar(1), scalar(2)}, vec({1, 0})), ValidationError);
  EXPECT_THROW(WeightedParamSet({scalar(1), scalar(2)}, vec({0.5, 0.6})), ValidationError);
  EXPECT_THROW(WeightedParamSet({scalar(1), vec({1, 2})}, vec({0.5, 0.5})), ValidationError);
  EXPECT_THROW(WeightedParamSet::uniform({}), ValidationError);
  const auto s = WeightedParamSet::scalars({1, 2}, vec({1, 3}));
  EXPECT_DOUBLE_EQ(s.weight(1), 0.75);
}

TEST(RightCentroid, Examples) {
  EXPECT_DOUBLE_EQ(right_centroid(pair12())[0], 1.5);
  EXPECT_EQ(right_centroid(WeightedParamSet::uniform({vec({3, -1})})), vec({3, -1}));
}

TEST(LeftCentroid, Examples) {
  EXPECT_NEAR(left_centroid(make_burg(1), pair12())[0], 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(left_centroid(make_extended_kl(1), WeightedParamSet::uniform({scalar(1), scalar(4)}))[0],
              2.0, 1e-14);
  ts::Rng rng(1);
  const auto set = WeightedParamSet::normalized(
      {rng.uniform_vector(2, -1, 1), rng.uniform_vector(2, -1, 1), rng.uniform_vector(2, -1, 1)},
      rng.uniform_vector(3, 0.1, 1));
  EXPECT_LT((left_centroid(make_quadratic(SpdMatrix::identity(2)), set) - right_centroid(set)).norm(),
            1e-15);
}

TEST(GeneralizedLeftCentroid, Reductions) {
  ts::Rng rng(2);
  const auto g = make_burg(2);
  const auto set = WeightedParamSet::uniform({rng.uniform_vector(2, 0.2, 3), rng.uniform_vector(2, 0.2, 3)});
  EXPECT_LT((generalized_left_centroid({g, g}, set) - left_centroid(g, set)).norm(), 1e-10);

  const Matrix q1 = rng.spd(2), q2 = rng.spd(2);
  const auto qs = WeightedParamSet::normalized({rng.uniform_vector(2, -1, 1), rng.uniform_vector(2, -1, 1)},
                                               vec({0.3, 0.7}));
  const Matrix qbar = 0.3 * q1 + 0.7 * q2;
  const Vector expected = qbar.ldlt().solve(0.3 * q1 * qs.point(0) + 0.7 * q2 * qs.point(1));
  const Vector got = generalized_left_centroid({make_quadratic(SpdMatrix(q1)), make_quadratic(SpdMatrix(q2))}, qs);
  EXPECT_LT((got - expected).norm(), 1e-10);
}

TEST(GeneralizedLeftCentroid, MixedScalarGenerators) {
  const auto burg = make_burg(1);
  const auto kl = make_extended_kl(1);
  const auto set = WeightedParamSet::normalized({scalar(0.7), scalar(3.0)}, vec({0.4, 0.6}));
  const Vector t = generalized_left_centroid({burg, kl}, set);
  const double target = 0.4 * burg.grad(scalar(0.7))[0] + 0.6 * kl.grad(scalar(3.0))[0];
  EXPECT_NEAR(0.4 * burg.grad(t)[0] + 0.6 * kl.grad(t)[0], target, 1e-10);
}

TEST(Information, BiasVariance) {
  const auto g = make_burg(1);
  const auto bv = bias_variance(g, pair12(), scalar(3));
  const double direct = 0.5 * bregman::bregman(g, scalar(1), scalar(3)) +
                        0.5 * bregman::bregman(g, scalar(2), scalar(3));
  EXPECT_NEAR(bv.info + bv.bias, direct, 1e-12);
  EXPECT_EQ(bias_variance(g, pair12(), scalar(1.5)).bias, 0.0);
  const auto same = WeightedParamSet::uniform({scalar(2), scalar(2)});
  EXPECT_EQ(bregman_information(g, same), 0.0);
  EXPECT_NEAR(bias_variance(g, same, scalar(5)).bias, bregman::bregman(g, scalar(2), scalar(5)), 1e-15);
  EXPECT_NEAR(jensen_diversity(g, pair12()), bregman_information(g, pair12()), 1e-15);
}

TEST(Information, ProjectionGapIsConstant) {
  ts::Rng rng(3);
  const auto g = make_extended_kl(3);
  const auto set = WeightedParamSet::uniform(
      {rng.uniform_vector(3, 0.2, 3), rng.uniform_vector(3, 0.2, 3), rng.uniform_vector(3, 0.2, 3)});
  const double info = bregman_information(g, set);
  for (int i = 0; i < 10; ++i) {
    EXPECT_NEAR(projection_gap(g, set, rng.uniform_vector(3, 0.1, 5)), info, 1e-12);
  }
}

TEST(CurvedCentroid, CircleQuarter) {
  const auto g = make_quadratic(SpdMatrix::identity(2));
  const auto circle = make_circle_model();
  const auto set = WeightedParamSet::uniform({scalar(0), scalar(std::numbers::pi / 2)});
  const Vector u = curved_centroid(g, circle, set, scalar(0.1));
  EXPECT_NEAR(u[0], std::numbers::pi / 4, 1e-8);
  const auto single = WeightedParamSet::uniform({scalar(1.2)});
  EXPECT_NEAR(curved_centroid(g, circle, single, scalar(0))[0], 1.2, 1e-8);
}

TEST(CurvedCentroid, OppositePointsAreAmbiguous) {
  const auto g = make_quadratic(SpdMatrix::identity(2));
  const auto set = WeightedParamSet::uniform({scalar(0), scalar(std::numbers::pi)});
  EXPECT_THROW(curved_centroid(g, make_circle_model(), set, scalar(0.3)), AmbiguityError);
}

TEST(CurvedCentroid, ArctanOracle) {
  ts::Rng rng(4);
  const auto g = make_quadratic(SpdMatrix::identity(2));
  for (int i = 0; i < 10; ++i) {
    const auto set = WeightedParamSet::normalized(
        {scalar(rng.uniform(0, 1.5)), scalar(rng.uniform(0, 1.5)), scalar(rng.uniform(0, 1.5))},
        rng.uniform_vector(3, 0.2, 1));
    double s = 0, c = 0;
    for (int k = 0; k < 3; ++k) {
      s += set.weight(k) * std::sin(set.point(k)[0]);
      c += set.weight(k) * std::cos(set.point(k)[0]);
    }
    const Vector u = curved_centroid(g, make_circle_model(), set, scalar(0.5));
    EXPECT_NEAR(std::remainder(u[0] - std::atan2(s, c), 2 * std::numbers::pi), 0.0, 1e-8);
  }
}

TEST(CurvedProjection, Deterministic) {
  const auto g = make_extended_kl(2);
  const auto model = make_ellipse_model(1.0, 0.5, vec({2, 2}));
  CurvedSearchOptions opts;
  opts.seed = 42;
  const Vector a = curved_projection(g, model, vec({3, 1}), scalar(0), opts);
  const Vector b = curved_projection(g, model, vec({3, 1}), scalar(0), opts);
  EXPECT_EQ(a, b);
}

TEST(PointwiseCentroid, IdentityFamilyGivesMixture) {
  const auto f = make_extended_kl(1);
  const std::vector<DiscreteDensity> ds{DiscreteDensity(vec({0.2, 0.5, 0.3})),
                                        DiscreteDensity(vec({0.6, 0.1, 0.3}))};
  CurvedModel identity{"identity", 3, 3, [](const Vector& u) { return u; },
                       [](const Vector& u) { return (u.array() > 0.0).all(); }};
  CurvedSearchOptions opts;
  opts.perturbation_scale = 0.05;
  const Vector c = pointwise_curved_centroid(f, Vector::Ones(3), ds, vec({0.5, 0.5}), identity,
                                             vec({0.3, 0.3, 0.3}), opts);
  EXPECT_LT((c - vec({0.4, 0.3, 0.3})).norm(), 1e-7);
}

TEST(PointwiseCentroid, TwoPointFamilyMatchesGridSearch) {
  const auto f = make_extended_kl(1);
  const std::vector<DiscreteDensity> ds{DiscreteDensity(vec({0.2, 0.8})), DiscreteDensity(vec({0.7, 0.3}))};
  const Vector w = vec({1.0, 2.0});
  CurvedModel family{"bernoulli", 1, 2, [](const Vector& u) { return vec({u[0], 1 - u[0]}); },
                     [](const Vector& u) { return u[0] > 0 && u[0] < 1; }};
  CurvedSearchOptions opts;
  opts.perturbation_scale = 0.05;
  const Vector u = pointwise_curved_centroid(f, w, ds, vec({0.5, 0.5}), family, scalar(0.5), opts);
  auto obj = [&](double t) {
    const DiscreteDensity q(vec({t, 1 - t}));
    return 0.5 * pointwise_divergence(f, w, ds[0], q) + 0.5 * pointwise_divergence(f, w, ds[1], q);
  };
  EXPECT_NEAR(u[0], ts::golden_min(obj, 0.01, 0.99), 1e-7);
}

TEST(Jeffreys1d, Examples) {
  const auto same = WeightedParamSet::uniform({scalar(3), scalar(3)});
  EXPECT_NEAR(jeffreys_centroid_1d(same), 3.0, 1e-14);
  // mpmath: 1.5 / W(1.5 e / sqrt 2)
  EXPECT_NEAR(jeffreys_centroid_1d(pair12()), 1.4567895043512105, 1e-15);
  const auto scaled = WeightedParamSet::uniform({scalar(7), scalar(14)});
  EXPECT_NEAR(jeffreys_centroid_1d(scaled), 7 * jeffreys_centroid_1d(pair12()), 1e-13);
}

TEST(Jeffreys1d, MatchesNumericMinimum) {
  ts::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto set = WeightedParamSet::normalized(
        {scalar(rng.uniform(0.1, 10)), scalar(rng.uniform(0.1, 10)), scalar(rng.uniform(0.1, 10))},
        rng.uniform_vector(3, 0.1, 1));
    const double t = jeffreys_centroid_1d(set);
    const double ref = ts::golden_min([&](double x) { return jeffreys_objective(set, scalar(x)); }, 0.1, 10);
    EXPECT_NEAR(t, ref, 1e-6 * ref);
  }
}

TEST(JeffreysCategorical, Examples) {
  const Vector p = vec({0.2, 0.5, 0.3});
  EXPECT_LT((jeffreys_centroid_categorical(WeightedParamSet::uniform({p, p})) - p).norm(), 1e-14);
  const Vector c = jeffreys_centroid_categorical(
      WeightedParamSet::uniform({vec({0.2, 0.8}), vec({0.8, 0.2})}));
  EXPECT_NEAR(c[0], 0.5, 1e-14);
  EXPECT_NEAR(c[1], 0.5, 1e-14);
}

TEST(JeffreysCategorical, HighPrecisionValue) {
  // mpmath, 40 digits
  const Vector c = jeffreys_centroid_categorical(
      WeightedParamSet::uniform({vec({0.2, 0.7, 0.1}), vec({0.5, 0.25, 0.25})}));
  EXPECT_NEAR(c[0], 0.35212474177082424, 1e-15);
  EXPECT_NEAR(c[1], 0.47181288734376363, 1e-15);
  EXPECT_NEAR(c[2], 0.17606237088541212, 1e-15);
}

TEST(JeffreysCategorical, AgreesWithBisectionOracleAndSampledMinimality) {
  ts::Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const std::vector<Vector> pts{rng.simplex(3), rng.simplex(3), rng.simplex(3)};
    const Vector w = rng.uniform_vector(3, 0.1, 1);
    const auto set = WeightedParamSet::normalized(pts, w);
    const Vector c = jeffreys_centroid_categorical(set);
    EXPECT_NEAR(c.sum(), 1.0, 1e-12);
    EXPECT_LT((c - ts::jeffreys_categorical_bisection(pts, set.weights())).norm(), 1e-10);
    const double oc = jeffreys_objective(set, c);
    for (int k = 0; k < 100; ++k) EXPECT_LE(oc, jeffreys_objective(set, rng.simplex(3)) + 1e-14);
  }
}

TEST(Cosh, Examples) {
  EXPECT_NEAR(cosh_centroid(pair12()), std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(cosh_centroid(WeightedParamSet::uniform({scalar(5), scalar(5)})), 5.0, 1e-15);
}

TEST(Cosh, Stationarity) {
  ts::Rng rng(7);
  const auto burg = make_burg(1);
  const auto set = WeightedParamSet::normalized(
      {scalar(rng.uniform(0.1, 5)), scalar(rng.uniform(0.1, 5)), scalar(rng.uniform(0.1, 5))},
      rng.uniform_vector(3, 0.1, 1));
  const double c = cosh_centroid(set);
  auto obj = [&](const Vector& t) {
    double s = 0;
    for (int i = 0; i < set.size(); ++i) s += set.weight(i) * symmetrized(burg, set.point(i), t);
    return s;
  };
  EXPECT_LT(std::abs(ts::numeric_gradient(obj, scalar(c), 1e-5)[0]), 1e-9);
}

TEST(LogDetCosh, Examples) {
  ts::Rng rng(8);
  const Matrix m = rng.spd(3);
  const SpdMatrix c = logdet_cosh_centroid({SpdMatrix(m), SpdMatrix(m)}, vec({0.5, 0.5}));
  EXPECT_LT((c.matrix() - m).norm(), 1e-12);
  const SpdMatrix s = logdet_cosh_centroid({SpdMatrix(Matrix::Constant(1, 1, 1)), SpdMatrix(Matrix::Constant(1, 1, 2))},
                                           vec({0.5, 0.5}));
  EXPECT_NEAR(s.matrix()(0, 0), std::numbers::sqrt2, 1e-15);
}

TEST(LogDetCosh, StationarityAndOrder) {
  ts::Rng rng(9);
  for (int d = 2; d <= 3; ++d) {
    const std::vector<SpdMatrix> mats{SpdMatrix(rng.spd(d)), SpdMatrix(rng.spd(d)), SpdMatrix(rng.spd(d))};
    const Vector w = vec({0.2, 0.3, 0.5});
    const Matrix c = logdet_cosh_centroid(mats, w).matrix();
    auto obj = [&](const Vector& p) { return logdet_cosh_objective(mats, w, unpack_symmetric(p, d)); };
    EXPECT_LT(ts::numeric_gradient(obj, pack_symmetric(c), 1e-6).norm(), 1e-6);
    const Matrix a = matrix_arithmetic_mean(mats, w).matrix();
    const Matrix h = matrix_harmonic_mean(mats, w).matrix();
    EXPECT_TRUE(loewner_geq(a, c, 1e-9));
    EXPECT_TRUE(loewner_geq(c, h, 1e-9));
    EXPECT_LT((c * h.inverse() * c - a).norm(), 1e-10);
  }
}
