#include "dfw/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dfw/errors.hpp"
#include "dfw/specfun.hpp"

namespace dfw {
namespace {

constexpr double kMinSamplesPerWidth = 8.0;

struct AxisGrid {
  double min = 0.0;
  double max = 0.0;
  double h = 0.0;
};

std::vector<AxisGrid> analyze_grid(const PointCloud& cloud) {
  cloud.check();
  if (cloud.size() < 2) throw ConfigError("transform input needs at least 2 samples");
  std::vector<AxisGrid> axes;
  std::size_t product = 1;
  for (std::size_t d = 0; d < cloud.dim(); ++d) {
    std::vector<double> values;
    values.reserve(cloud.size());
    for (const auto& p : cloud.points) values.push_back(p[d]);
    std::sort(values.begin(), values.end());
    const double range = values.back() - values.front();
    const double tol = 1e-9 * std::max(range, 1e-300);
    std::vector<double> unique;
    for (double v : values) {
      if (unique.empty() || v - unique.back() > tol) unique.push_back(v);
    }
    if (unique.size() < 2) throw ConfigError("transform input must span every axis");
    const double h = range / static_cast<double>(unique.size() - 1);
    for (std::size_t i = 1; i < unique.size(); ++i) {
      if (std::abs(unique[i] - unique[i - 1] - h) > 1e-6 * h) {
        throw ConfigError("transform input must be sampled on a regular grid");
      }
    }
    product *= unique.size();
    axes.push_back({unique.front(), unique.back(), h});
  }
  if (product != cloud.size()) throw ConfigError("transform input grid is incomplete or has duplicates");
  return axes;
}

KernelSpec spec_for_parameter(const TransformOptions& options, double theta) {
  KernelSpec spec = options.kernel;
  switch (options.axis) {
    case ParameterAxis::SCALE:
      spec.scale = theta;
      break;
    case ParameterAxis::DIMENSION:
      spec.n = theta;
      break;
    case ParameterAxis::ORDER:
      if (theta != std::floor(theta) || theta < 0.0) {
        throw ConfigError("order parameter samples must be non-negative integers");
      }
      spec.m = static_cast<int>(theta);
      break;
  }
  spec.validate();
  return spec;
}

}  // namespace

TransformGrid TransformGrid::make(std::vector<double> parameters, std::vector<Point> translates,
                                  Quadrature quadrature) {
  if (parameters.empty()) throw ConfigError("transform needs at least one parameter sample");
  for (std::size_t i = 1; i < parameters.size(); ++i) {
    if (!(parameters[i] > parameters[i - 1])) {
      throw ConfigError("parameter samples must be strictly increasing");
    }
  }
  TransformGrid grid;
  grid.quadrature = quadrature;
  const std::size_t n = parameters.size();
  grid.parameter_weights.assign(n, 1.0);
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double left = i > 0 ? parameters[i] - parameters[i - 1] : parameters[1] - parameters[0];
      const double right =
          i + 1 < n ? parameters[i + 1] - parameters[i] : parameters[n - 1] - parameters[n - 2];
      if (quadrature == Quadrature::MIDPOINT) {
        grid.parameter_weights[i] = 0.5 * (left + right);
      } else {
        grid.parameter_weights[i] = 0.5 * ((i > 0 ? left : 0.0) + (i + 1 < n ? right : 0.0));
      }
    }
  }
  grid.parameters = std::move(parameters);
  grid.translates = std::move(translates);
  return grid;
}

std::vector<double> regular_grid_spacing(const PointCloud& cloud) {
  std::vector<double> h;
  for (const auto& axis : analyze_grid(cloud)) h.push_back(axis.h);
  return h;
}

std::vector<double> sample_weights(const PointCloud& cloud, Quadrature quadrature) {
  const auto axes = analyze_grid(cloud);
  std::vector<double> w(cloud.size(), 1.0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t d = 0; d < axes.size(); ++d) {
      double wd = axes[d].h;
      if (quadrature == Quadrature::TRAPEZOID) {
        const double x = cloud.points[i][d];
        const double tol = 1e-6 * axes[d].h;
        if (std::abs(x - axes[d].min) < tol || std::abs(x - axes[d].max) < tol) wd *= 0.5;
      }
      w[i] *= wd;
    }
  }
  return w;
}

double kernel_effective_width(const TransformOptions& options, double theta) {
  if (options.kind != TransformKind::KERNEL) return 0.0;
  const double s = options.axis == ParameterAxis::SCALE ? theta : options.kernel.scale;
  switch (options.kernel.family) {
    case Family::HELMHOLTZ:
    case Family::MOD_HELMHOLTZ:
    case Family::DIFFUSION_RBF:
    case Family::HARTLEY:
    case Family::TRANSLATE_HARMONIC:
    case Family::GEODESIC_HELMHOLTZ:
      return 1.0 / s;
    case Family::POISSON:
    case Family::POISSON_TRUNCATED:
      return s;
    case Family::GAUSS_HEAT:
      return std::sqrt(2.0 * s);
    default:
      return 0.0;
  }
}

TransformResult forward_transform(const PointCloud& f, const TransformGrid& grid,
                                  const TransformOptions& options) {
  if (!f.has_values()) throw ConfigError("transform input needs sample values (column f)");
  const std::vector<double> weights = sample_weights(f, grid.quadrature);
  const std::vector<double> spacing = regular_grid_spacing(f);
  const double h = *std::min_element(spacing.begin(), spacing.end());
  if (grid.parameter_weights.size() != grid.parameters.size()) {
    throw ConfigError("transform grid weights are not initialized");
  }

  TransformResult result;
  result.grid_spacing = h;
  const auto P = static_cast<Eigen::Index>(grid.parameters.size());
  const auto T = static_cast<Eigen::Index>(grid.translates.size());
  result.values = Eigen::MatrixXcd::Zero(P, T);

  double weyl_constant = 0.0;
  if (options.kind == TransformKind::WEYL) {
    const double n = options.kernel.n;
    if (!(n > 1.0)) throw ConfigError("Weyl-type transform needs n > 1");
    weyl_constant = 2.0 * specfun::gamma(0.5 * n) /
                    (std::sqrt(std::numbers::pi) * specfun::gamma(0.5 * (n - 1.0)));
  }
  double stieltjes_gamma = 0.0;
  if (options.kind == TransformKind::STIELTJES) {
    if (!(options.stieltjes_p > 0.0)) throw ConfigError("Stieltjes exponent p must be > 0");
    stieltjes_gamma = specfun::gamma(options.stieltjes_p);
  }

  for (Eigen::Index a = 0; a < P; ++a) {
    const double theta = grid.parameters[static_cast<std::size_t>(a)];
    KernelSpec spec;
    if (options.kind == TransformKind::KERNEL) spec = spec_for_parameter(options, theta);
    const double width = kernel_effective_width(options, theta);
    if (width > 0.0 && width / h < kMinSamplesPerWidth) result.coarse_grid = true;

    for (Eigen::Index b = 0; b < T; ++b) {
      const Point& xi = grid.translates[static_cast<std::size_t>(b)];
      std::complex<double> sum = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const Point& x = f.points[i];
        const double d = euclidean(xi, x);
        std::complex<double> kernel = 0.0;
        switch (options.kind) {
          case TransformKind::KERNEL: {
            const KernelValue v = evaluate(spec, xi, x);
            if (v.singular) {
              throw SingularEvaluationError("transform kernel singular at a sample (unhandled singular cell)");
            }
            kernel = std::conj(v.value());
            if (options.analysis == AnalysisMode::RECIPROCAL) {
              if (d == 0.0 || kernel == 0.0) {
                throw SingularEvaluationError("reciprocal analysis kernel singular at a sample");
              }
              kernel = 1.0 / (kernel * d);
            }
            break;
          }
          case TransformKind::WEYL: {
            const double q = d * d - theta * theta;
            if (q > 0.0) kernel = weyl_constant * std::pow(q, 0.5 * (options.kernel.n - 3.0)) * d;
            break;
          }
          case TransformKind::HILBERT:
            if (std::abs(d - theta) >= 0.5 * h) kernel = 1.0 / (d - theta);
            break;
          case TransformKind::ABEL: {
            const double q = d * d - theta * theta;
            if (q > 0.0) kernel = d / std::sqrt(q);
            break;
          }
          case TransformKind::STIELTJES: {
            const double base = d + theta;
            if (!(base > 0.0)) {
              throw SingularEvaluationError("Stieltjes kernel singular at a sample (d + t = 0)");
            }
            kernel = stieltjes_gamma * std::pow(base, -options.stieltjes_p);
            break;
          }
        }
        sum += weights[i] * f.values[i] * kernel;
      }
      result.values(a, b) = sum;
    }
  }
  return result;
}

}  // namespace dfw
