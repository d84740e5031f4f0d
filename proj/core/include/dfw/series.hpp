#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "dfw/green.hpp"
#include "dfw/kernels.hpp"
#include "dfw/point_cloud.hpp"

namespace dfw {

struct SeriesTerm {
  Point center;
  KernelSpec spec;
  double coefficient = 0.0;
};

struct FitReport {
  double residual_rms = 0.0;
  double condition_estimate = 1.0;
  double regularization = 0.0;
};

/// Kernel expansion sum_k beta_k K_k(x, c_k), optionally on top of a solved
/// harmonic part.
struct SeriesModel {
  std::vector<SeriesTerm> terms;
  std::shared_ptr<const HarmonicModel> harmonic_part;
  FitReport fit_report;
};

/// Matrix A(i, j) = Re K_j(x_i, c_j). `specs` has one entry per center or a
/// single entry shared by all. Throws SingularEvaluationError(i, j) on the
/// singular set and ConfigError for duplicate (center, spec) pairs.
Eigen::MatrixXd assemble(const std::vector<Point>& points, const std::vector<Point>& centers,
                         const std::vector<KernelSpec>& specs);

/// Minimizes |A beta - f|^2 + reg |beta|^2. With reg = 0 a rank-deficient A
/// raises SingularSystemError carrying the condition estimate. When a
/// harmonic part is given the series is fitted to f - f0.
SeriesModel fit(const PointCloud& cloud, const std::vector<Point>& centers,
                const std::vector<KernelSpec>& specs, double regularization,
                std::shared_ptr<const HarmonicModel> harmonic_part = nullptr);

/// Solves the (optionally ridge-regularized) least-squares problem for a
/// given matrix; shared by fit() and the multiple-reciprocity ladder.
Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& f,
                                    double regularization, double* condition_estimate = nullptr);

/// 2-norm condition number sigma_max / sigma_min (inf if rank deficient).
double condition_number(const Eigen::MatrixXd& A);

double evaluate(const SeriesModel& model, const Point& x);
std::vector<double> evaluate(const SeriesModel& model, const std::vector<Point>& points);

/// Versioned text format; doubles at 17 significant digits.
void write_series_model(std::ostream& out, const SeriesModel& model);
SeriesModel read_series_model(std::istream& in);

std::vector<KernelSpec> broadcast_specs(const std::vector<KernelSpec>& specs, std::size_t count);

}  // namespace dfw
