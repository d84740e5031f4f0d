#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dfw/kernels.hpp"
#include "dfw/point_cloud.hpp"

namespace dfw {

/// Analysis kernel of a forward transform, as a function of d = |xi - x| and
/// the transform parameter theta:
///   KERNEL     conj K(d; theta) from a KernelSpec with theta on `axis`
///   WEYL       c_n (d^2 - theta^2)^{(n-3)/2} d H(d^2 - theta^2),
///              c_n = 2 Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2))
///   HILBERT    1 / (d - theta), principal value
///   ABEL       d / sqrt(d^2 - theta^2) H(d^2 - theta^2)
///   STIELTJES  Gamma(p) (d + theta)^{-p}
/// H is the Heaviside step with H(0) = 0.
enum class TransformKind { KERNEL, WEYL, HILBERT, ABEL, STIELTJES };

/// Which KernelSpec field the parameter samples replace (KERNEL only).
enum class ParameterAxis { SCALE, DIMENSION, ORDER };

enum class Quadrature { MIDPOINT, TRAPEZOID };

/// PLAIN uses the (conjugated) kernel itself; RECIPROCAL uses 1/(K d).
enum class AnalysisMode { PLAIN, RECIPROCAL };

struct TransformGrid {
  std::vector<double> parameters;          // strictly increasing
  std::vector<double> parameter_weights;   // positive, sum = parameter domain measure
  std::vector<Point> translates;
  Quadrature quadrature = Quadrature::MIDPOINT;

  /// Fills parameter_weights for the chosen rule. MIDPOINT treats samples as
  /// cell centers (end cells mirrored); TRAPEZOID as cell edges.
  static TransformGrid make(std::vector<double> parameters, std::vector<Point> translates,
                            Quadrature quadrature);
};

struct TransformOptions {
  TransformKind kind = TransformKind::KERNEL;
  KernelSpec kernel;  // KERNEL: base spec; WEYL: kernel.n is the dimension
  ParameterAxis axis = ParameterAxis::SCALE;
  AnalysisMode analysis = AnalysisMode::PLAIN;
  double stieltjes_p = 1.0;
};

struct TransformResult {
  Eigen::MatrixXcd values;    // parameters x translates
  bool coarse_grid = false;   // fewer than 8 samples across the kernel's width
  double grid_spacing = 0.0;  // smallest sample spacing of f
};

/// Regular tensor grid spacing per axis; throws ConfigError if the cloud is
/// not a complete regular grid.
std::vector<double> regular_grid_spacing(const PointCloud& cloud);

/// Sample weights of f's grid under the chosen rule.
std::vector<double> sample_weights(const PointCloud& cloud, Quadrature quadrature);

/// W(theta, xi) = sum_i w_i f(x_i) A(|xi - x_i|; theta).
TransformResult forward_transform(const PointCloud& f, const TransformGrid& grid,
                                  const TransformOptions& options);

/// Effective width of the analysis kernel at parameter theta, or 0 when the
/// kernel has no natural width.
double kernel_effective_width(const TransformOptions& options, double theta);

}  // namespace dfw
