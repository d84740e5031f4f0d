#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "dfw/errors.hpp"
#include "dfw/series.hpp"
#include "test_support.hpp"

namespace dfw {
namespace {

KernelSpec poisson_2d(double s) {
  KernelSpec spec;
  spec.family = Family::POISSON;
  spec.n = 2;
  spec.scale = s;
  return spec;
}

double franke_at(const Point& p) { return testing::franke(p[0], p[1]); }

std::vector<Point> test_grid() {
  std::vector<Point> out;
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) out.push_back(Point{0.05 * i, 0.05 * j});
  }
  return out;
}

double held_out_rms(std::size_t centers) {
  const auto pts = testing::halton_2d(centers);
  const PointCloud cloud = testing::sample(pts, franke_at);
  const SeriesModel model = fit(cloud, pts, {poisson_2d(0.25)}, 0.0);
  std::vector<double> err;
  for (const auto& p : test_grid()) err.push_back(evaluate(model, p) - franke_at(p));
  return rms(err);
}

TEST(Assemble, EntriesMatchKernelEvaluations) {
  const auto pts = testing::halton_2d(7);
  const auto centers = testing::halton_2d(4, 100);
  KernelSpec mh;
  mh.family = Family::MOD_HELMHOLTZ;
  mh.kind = Kind::GENERAL;
  mh.scale = 1.5;
  const Eigen::MatrixXd A = assemble(pts, centers, {mh});
  ASSERT_EQ(A.rows(), 7);
  ASSERT_EQ(A.cols(), 4);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(A(i, j), evaluate(mh, pts[i], centers[j]).re);
  }
}

TEST(Assemble, RejectsSingularAndDuplicateCenters) {
  KernelSpec lap;
  const auto pts = testing::halton_2d(5);
  try {
    assemble(pts, {pts[2]}, {lap});
    FAIL() << "expected SingularEvaluationError";
  } catch (const SingularEvaluationError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.column(), 0u);
  }
  EXPECT_THROW(assemble(pts, {Point{5, 5}, Point{5, 5}}, {lap}), ConfigError);
  EXPECT_THROW(assemble(pts, {Point{5, 5}, Point{6, 5}, Point{7, 5}}, {lap, lap}), ConfigError);
  KernelSpec sch;
  sch.family = Family::SCHRODINGER;
  EXPECT_THROW(assemble(pts, {Point{5, 5}}, {sch}), ConfigError);
}

TEST(SolveLeastSquares, ErrorsAndRegularization) {
  Eigen::MatrixXd A(2, 3);
  A << 1, 2, 3, 4, 5, 6;
  Eigen::VectorXd f(2);
  f << 1, 2;
  EXPECT_THROW(solve_least_squares(A, f, 0.0), SingularSystemError);
  EXPECT_NO_THROW(solve_least_squares(A, f, 1e-8));
  EXPECT_THROW(solve_least_squares(A, f, -1.0), ConfigError);
  EXPECT_THROW(solve_least_squares(A, Eigen::VectorXd(3), 0.1), DimensionError);
  Eigen::MatrixXd R(3, 2);
  R << 1, 2, 2, 4, 3, 6;
  EXPECT_THROW(solve_least_squares(R, Eigen::VectorXd::Ones(3), 0.0), SingularSystemError);
  // Tikhonov solution agrees with the normal equations (A^T A + reg I) x = A^T f
  Eigen::MatrixXd B = Eigen::MatrixXd::Random(6, 3);
  Eigen::VectorXd g = Eigen::VectorXd::Random(6);
  const Eigen::VectorXd x = solve_least_squares(B, g, 0.3);
  const Eigen::VectorXd ref = (B.transpose() * B + 0.3 * Eigen::MatrixXd::Identity(3, 3)).ldlt().solve(B.transpose() * g);
  EXPECT_LT((x - ref).norm(), 1e-12);
}

TEST(SolveLeastSquares, ConditionNumber) {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(3, 3);
  D.diagonal() << 10, 2, 0.5;
  EXPECT_NEAR(condition_number(D), 20.0, 1e-12);
}

TEST(Fit, SquareInterpolationReproducesData) {
  const auto pts = testing::halton_2d(50);
  const PointCloud cloud = testing::sample(pts, franke_at);
  for (const KernelSpec& spec : {poisson_2d(0.25), poisson_2d(0.5)}) {
    const SeriesModel model = fit(cloud, pts, {spec}, 0.0);
    const double tol = 1e-8 * rms(cloud.values);
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_NEAR(evaluate(model, pts[i]), cloud.values[i], tol);
    EXPECT_LT(model.fit_report.residual_rms, tol);
    EXPECT_GE(model.fit_report.condition_estimate, 1.0);
  }
}

TEST(Fit, HeldOutErrorDecreasesWithCenters) {
  const double e25 = held_out_rms(25);
  const double e50 = held_out_rms(50);
  const double e100 = held_out_rms(100);
  EXPECT_LT(e50, e25);
  EXPECT_LT(e100, e50);
}

TEST(Fit, OffCenterLaplaceExpansion) {
  // 2D harmonic data fitted by source points outside the domain.
  const auto pts = testing::halton_2d(40);
  const PointCloud cloud = testing::sample(pts, [](const Point& p) { return std::exp(p[0]) * std::cos(p[1]); });
  std::vector<Point> centers;
  for (int k = 0; k < 16; ++k) {
    const double a = 2 * std::numbers::pi * k / 16;
    centers.push_back(Point{0.5 + 2 * std::cos(a), 0.5 + 2 * std::sin(a)});
  }
  KernelSpec lap;
  const SeriesModel model = fit(cloud, centers, {lap}, 0.0);
  EXPECT_LT(model.fit_report.residual_rms, 1e-6);
  EXPECT_NEAR(evaluate(model, Point{0.3, 0.7}), std::exp(0.3) * std::cos(0.7), 1e-5);
}

TEST(Fit, HarmonicPartIsSubtracted) {
  const BoundaryMesh mesh = discretize_circle(0.5, 0.5, 1, 64);
  std::vector<double> g;
  for (const auto& e : mesh.elements) g.push_back(2.0);
  auto harmonic = std::make_shared<const HarmonicModel>(solve_dirichlet(mesh, g));
  const auto pts = testing::halton_2d(30);
  const PointCloud cloud = testing::sample(pts, [](const Point& p) { return 2.0 + testing::franke(p[0], p[1]); });
  const SeriesModel with = fit(cloud, pts, {poisson_2d(0.3)}, 0.0, harmonic);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_NEAR(evaluate(with, pts[i]), cloud.values[i], 1e-8);
  double sum = 0.0;
  for (const auto& t : with.terms) sum += std::abs(t.coefficient);
  const SeriesModel plain = fit(testing::sample(pts, franke_at), pts, {poisson_2d(0.3)}, 0.0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    EXPECT_NEAR(with.terms[k].coefficient, plain.terms[k].coefficient, 1e-5 * sum);
  }
}

TEST(Fit, RequiresValues) {
  PointCloud c;
  c.points = testing::halton_2d(3);
  EXPECT_THROW(fit(c, c.points, {poisson_2d(1)}, 0.0), ConfigError);
}

TEST(SeriesModelIo, RoundTripIsBitExact) {
  const auto pts = testing::halton_2d(20);
  KernelSpec cd;
  cd.family = Family::CONV_DIFF;
  cd.kind = Kind::GENERAL;
  cd.direction = {0.3, -0.1};
  cd.k = 0.2;
  const SeriesModel model = fit(testing::sample(pts, franke_at), pts, {cd}, 1e-10);
  std::stringstream text;
  write_series_model(text, model);
  const SeriesModel back = read_series_model(text);
  ASSERT_EQ(back.terms.size(), model.terms.size());
  for (const auto& p : test_grid()) EXPECT_EQ(evaluate(back, p), evaluate(model, p));
  std::stringstream again;
  write_series_model(again, back);
  std::stringstream first;
  write_series_model(first, model);
  EXPECT_EQ(again.str(), first.str());
  std::istringstream junk("not a model\n");
  EXPECT_THROW(read_series_model(junk), ConfigError);
}

}  // namespace
}  // namespace dfw

namespace dfw {
namespace {

TEST(Fit, SingleKernelTermRecoversCoefficient) {
  KernelSpec g;
  g.family = Family::GAUSS_HEAT;
  g.n = 2;
  g.scale = 0.05;
  const Point c{0.4, 0.6};
  const auto pts = testing::halton_2d(12);
  const PointCloud cloud = testing::sample(pts, [&](const Point& p) { return evaluate(g, p, c).re; });
  const SeriesModel model = fit(cloud, {c}, {g}, 0.0);
  EXPECT_NEAR(model.terms[0].coefficient, 1.0, 1e-10);
}

TEST(Fit, ZeroDataGivesZeroCoefficients) {
  const auto pts = testing::halton_2d(10);
  const SeriesModel model = fit(testing::sample(pts, [](const Point&) { return 0.0; }), pts, {poisson_2d(0.5)}, 1e-6);
  for (const auto& t : model.terms) EXPECT_EQ(t.coefficient, 0.0);
  EXPECT_EQ(evaluate(SeriesModel{}, Point{0.3, 0.3}), 0.0);
}

TEST(Fit, RegularizedFrankeFifty) {
  const auto pts = testing::halton_2d(50);
  const PointCloud cloud = testing::sample(pts, franke_at);
  const SeriesModel m50 = fit(cloud, pts, {poisson_2d(0.5)}, 1e-10);
  // Training residual of the ridge solution, checked against the normal equations.
  const Eigen::MatrixXd A = assemble(pts, pts, {poisson_2d(0.5)});
  const Eigen::VectorXd f = Eigen::Map<const Eigen::VectorXd>(cloud.values.data(), 50);
  const Eigen::VectorXd beta =
      (A.transpose() * A + 1e-10 * Eigen::MatrixXd::Identity(50, 50)).ldlt().solve(A.transpose() * f);
  const double oracle_rms = (A * beta - f).norm() / std::sqrt(50.0);
  EXPECT_NEAR(m50.fit_report.residual_rms, oracle_rms, 1e-3 * oracle_rms);
  EXPECT_LT(m50.fit_report.residual_rms, 1e-4 * rms(cloud.values));
  const auto p25 = testing::halton_2d(25);
  const SeriesModel m25 = fit(testing::sample(p25, franke_at), p25, {poisson_2d(0.5)}, 1e-10);
  const auto held = testing::halton_2d(200, 1000);
  std::vector<double> e50, e25;
  for (const auto& p : held) {
    e50.push_back(evaluate(m50, p) - franke_at(p));
    e25.push_back(evaluate(m25, p) - franke_at(p));
  }
  EXPECT_LT(rms(e50), rms(e25));
}

TEST(Fit, RefitOnOwnPredictionsIsIdempotent) {
  const auto pts = testing::halton_2d(30);
  const auto centers = testing::halton_2d(12, 500);
  const SeriesModel first = fit(testing::sample(pts, franke_at), centers, {poisson_2d(0.4)}, 0.0);
  const SeriesModel again =
      fit(testing::sample(pts, [&](const Point& p) { return evaluate(first, p); }), centers, {poisson_2d(0.4)}, 0.0);
  for (std::size_t k = 0; k < centers.size(); ++k) {
    EXPECT_NEAR(again.terms[k].coefficient, first.terms[k].coefficient,
                1e-8 * std::max(1.0, std::abs(first.terms[k].coefficient)));
  }
}

TEST(Fit, LinearInData) {
  const auto pts = testing::halton_2d(25);
  auto g = [](const Point& p) { return std::sin(3 * p[0]) * p[1]; };
  const SeriesModel mf = fit(testing::sample(pts, franke_at), pts, {poisson_2d(0.4)}, 0.0);
  const SeriesModel mg = fit(testing::sample(pts, g), pts, {poisson_2d(0.4)}, 0.0);
  const SeriesModel mc =
      fit(testing::sample(pts, [&](const Point& p) { return 2 * franke_at(p) - 3 * g(p); }), pts, {poisson_2d(0.4)}, 0.0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double expected = 2 * mf.terms[k].coefficient - 3 * mg.terms[k].coefficient;
    EXPECT_NEAR(mc.terms[k].coefficient, expected, 1e-8 * std::max(1.0, std::abs(expected)));
  }
}

}  // namespace
}  // namespace dfw
