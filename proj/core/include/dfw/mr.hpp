#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <vector>

#include "dfw/green.hpp"
#include "dfw/kernels.hpp"
#include "dfw/point_cloud.hpp"
#include "dfw/series.hpp"

namespace dfw {

enum class LadderFamily { LAPLACE_2D, LAPLACE_3D };
enum class TerminationReason { TOL_REACHED, MAX_ORDER, STAGNATION };

/// One accepted stage: order-m kernels at the centers and their coefficients.
struct MRStage {
  int m = 0;
  std::vector<KernelSpec> specs;
  std::vector<Point> centers;
  std::vector<double> coefficients;
  double residual_rms = 0.0;
  std::size_t thresholded = 0;  // coefficients zeroed by hard thresholding
};

struct MRLadder {
  double initial_residual_rms = 0.0;  // rms of f - f0 (stage 0)
  std::vector<MRStage> stages;
  std::shared_ptr<const HarmonicModel> base_harmonic;
  TerminationReason terminated_reason = TerminationReason::MAX_ORDER;
};

struct MROptions {
  int max_order = 3;
  double tol = 0.0;             // absolute rms target
  double threshold = 0.0;       // zero |beta| < threshold * max|beta|
  double regularization = 0.0;
  std::shared_ptr<const HarmonicModel> harmonic;  // f0; zero when absent
};

KernelSpec ladder_spec(LadderFamily family, int m);

/// Greedy stagewise multiple-reciprocity decomposition: stage m fits the
/// current residual with order-m Laplace kernels. A stage that raises the
/// residual by more than 10% stops the run (STAGNATION); a smaller increase
/// rejects the stage and moves on to the next order.
MRLadder mr_decompose(const PointCloud& cloud, LadderFamily family,
                      const std::vector<Point>& centers, const MROptions& options);

/// f0(x) + the sum of all stage expansions at x.
double evaluate(const MRLadder& ladder, const Point& x);

/// Contribution of a single stage at x.
double evaluate_stage(const MRStage& stage, const Point& x);

/// Residuals ((f - f0) - s_1) - s_2 ... in the order used while building the
/// ladder; their rms reproduces the last recorded residual_rms exactly.
std::vector<double> ladder_residuals(const MRLadder& ladder, const PointCloud& cloud);

/// Single least-squares fit over the stacked dictionary of orders 1..M.
SeriesModel mr_joint_fit(const PointCloud& cloud, LadderFamily family,
                         const std::vector<Point>& centers, int max_order,
                         double regularization = 0.0);

/// Report CSV `stage,residual_rms,n_terms,thresholded` (stage 0 = f - f0).
void write_ladder_report(std::ostream& out, const MRLadder& ladder);

std::string to_string(TerminationReason reason);
LadderFamily parse_ladder_family(const std::string& text);

/// Samples on a uniform grid; values stored x-fastest (index i + nx * j).
struct GridSamples {
  int dim = 1;
  std::size_t nx = 0;
  std::size_t ny = 1;
  double h = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j = 0) const { return values[i + nx * j]; }
};

enum class FactorType { LAPLACIAN, HELMHOLTZ, MOD_HELMHOLTZ, CONV_DIFF };

struct OperatorFactor {
  FactorType type = FactorType::LAPLACIAN;
  double lambda = 1.0;  // HELMHOLTZ
  double mu = 1.0;      // MOD_HELMHOLTZ
  double D = 1.0;       // CONV_DIFF: D lap f + v.grad f - k f
  std::vector<double> v;
  double k = 0.0;
};

/// Applies the factors in order with fourth-order central differences
/// (five-point stencils). Each factor trims two samples from every side.
GridSamples apply_composite_operator(const GridSamples& f, const std::vector<OperatorFactor>& factors);

struct ParticularSolution {
  SeriesModel model;
  std::vector<double> residual_history;  // r_1 .. r_M
  double r_M = 0.0;
  bool diverged = false;
};

/// Multiple-reciprocity particular solution of (lap + lambda^2) u = f:
/// stage m fits the remaining source with order-m general Helmholtz
/// solutions, whose coefficients are carried to order m + 1 (times lambda)
/// in u. r_m = max|remaining source| / rms(f) on the source points.
ParticularSolution mr_particular_solution(const PointCloud& source, double lambda,
                                          const std::vector<Point>& centers, int M,
                                          double regularization = 0.0);

}  // namespace dfw
