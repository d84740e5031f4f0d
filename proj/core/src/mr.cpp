#include "dfw/mr.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "dfw/errors.hpp"
#include "dfw/text_io.hpp"

namespace dfw {
namespace {

constexpr double kStagnationFactor = 1.10;

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

double sup_norm(const std::vector<double>& v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

// Fourth-order second and first derivative stencils.
double d2(double fm2, double fm1, double f0, double fp1, double fp2, double h) {
  return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
}

double d1(double fm2, double fm1, double fp1, double fp2, double h) {
  return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}

GridSamples apply_factor(const GridSamples& f, const OperatorFactor& factor) {
  const bool two_d = f.dim == 2;
  if (f.nx < 5 || (two_d && f.ny < 5)) {
    throw DomainError("grid too small for the requested number of operator factors");
  }
  GridSamples out;
  out.dim = f.dim;
  out.h = f.h;
  out.nx = f.nx - 4;
  out.ny = two_d ? f.ny - 4 : 1;
  out.x0 = f.x0 + 2.0 * f.h;
  out.y0 = two_d ? f.y0 + 2.0 * f.h : f.y0;
  out.values.resize(out.nx * out.ny);
  if (factor.type == FactorType::CONV_DIFF && factor.v.size() != static_cast<std::size_t>(f.dim)) {
    throw DimensionError("convection velocity must match the grid dimension");
  }
  const double h = f.h;
  for (std::size_t j = 0; j < out.ny; ++j) {
    for (std::size_t i = 0; i < out.nx; ++i) {
      const std::size_t fi = i + 2;
      const std::size_t fj = two_d ? j + 2 : 0;
      const double c = f.at(fi, fj);
      double lap = d2(f.at(fi - 2, fj), f.at(fi - 1, fj), c, f.at(fi + 1, fj), f.at(fi + 2, fj), h);
      double gx = 0.0;
      double gy = 0.0;
      if (factor.type == FactorType::CONV_DIFF) {
        gx = d1(f.at(fi - 2, fj), f.at(fi - 1, fj), f.at(fi + 1, fj), f.at(fi + 2, fj), h);
      }
      if (two_d) {
        lap += d2(f.at(fi, fj - 2), f.at(fi, fj - 1), c, f.at(fi, fj + 1), f.at(fi, fj + 2), h);
        if (factor.type == FactorType::CONV_DIFF) {
          gy = d1(f.at(fi, fj - 2), f.at(fi, fj - 1), f.at(fi, fj + 1), f.at(fi, fj + 2), h);
        }
      }
      double value = 0.0;
      switch (factor.type) {
        case FactorType::LAPLACIAN:
          value = lap;
          break;
        case FactorType::HELMHOLTZ:
          value = lap + factor.lambda * factor.lambda * c;
          break;
        case FactorType::MOD_HELMHOLTZ:
          value = lap - factor.mu * factor.mu * c;
          break;
        case FactorType::CONV_DIFF:
          value = factor.D * lap + factor.v[0] * gx + (two_d ? factor.v[1] * gy : 0.0) - factor.k * c;
          break;
      }
      out.values[i + out.nx * j] = value;
    }
  }
  return out;
}

}  // namespace

KernelSpec ladder_spec(LadderFamily family, int m) {
  KernelSpec spec;
  spec.family = Family::LAPLACE;
  spec.kind = Kind::FUNDAMENTAL;
  spec.n = family == LadderFamily::LAPLACE_2D ? 2.0 : 3.0;
  spec.m = m;
  return spec;
}

double evaluate_stage(const MRStage& stage, const Point& x) {
  double value = 0.0;
  for (std::size_t k = 0; k < stage.centers.size(); ++k) {
    if (stage.coefficients[k] == 0.0) continue;
    const KernelValue v = evaluate(stage.specs[k], x, stage.centers[k]);
    if (v.singular) throw SingularEvaluationError("ladder evaluated on a kernel singularity");
    value += stage.coefficients[k] * v.re;
  }
  return value;
}

double evaluate(const MRLadder& ladder, const Point& x) {
  double value = ladder.base_harmonic ? eval_interior(*ladder.base_harmonic, x).value : 0.0;
  for (const auto& stage : ladder.stages) value += evaluate_stage(stage, x);
  return value;
}

std::vector<double> ladder_residuals(const MRLadder& ladder, const PointCloud& cloud) {
  std::vector<double> r(cloud.values);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (ladder.base_harmonic) r[i] -= eval_interior(*ladder.base_harmonic, cloud.points[i]).value;
  }
  for (const auto& stage : ladder.stages) {
    for (std::size_t i = 0; i < cloud.size(); ++i) r[i] -= evaluate_stage(stage, cloud.points[i]);
  }
  return r;
}

MRLadder mr_decompose(const PointCloud& cloud, LadderFamily family,
                      const std::vector<Point>& centers, const MROptions& options) {
  cloud.check();
  if (!cloud.has_values()) throw ConfigError("decomposition needs sample values (column f)");
  if (options.max_order < 1) throw ConfigError("max order must be >= 1");
  if (!(options.threshold >= 0.0) || options.threshold >= 1.0) {
    throw ConfigError("threshold must be in [0, 1)");
  }
  MRLadder ladder;
  ladder.base_harmonic = options.harmonic;
  std::vector<double> residual = ladder_residuals(ladder, cloud);
  double current = rms(residual);
  ladder.initial_residual_rms = current;
  if (current <= options.tol) {
    ladder.terminated_reason = TerminationReason::TOL_REACHED;
    return ladder;
  }

  for (int m = 1; m <= options.max_order; ++m) {
    MRStage stage;
    stage.m = m;
    stage.specs.assign(centers.size(), ladder_spec(family, m));
    stage.centers = centers;
    const Eigen::MatrixXd A = assemble(cloud.points, centers, stage.specs);
    const Eigen::VectorXd beta = solve_least_squares(A, to_vector(residual), options.regularization);
    stage.coefficients.assign(beta.data(), beta.data() + beta.size());
    const double cutoff = options.threshold * beta.cwiseAbs().maxCoeff();
    for (double& b : stage.coefficients) {
      if (b != 0.0 && std::abs(b) < cutoff) {
        b = 0.0;
        ++stage.thresholded;
      }
    }
    std::vector<double> next = residual;
    for (std::size_t i = 0; i < cloud.size(); ++i) next[i] -= evaluate_stage(stage, cloud.points[i]);
    const double next_rms = rms(next);
    if (next_rms > kStagnationFactor * current) {
      ladder.terminated_reason = TerminationReason::STAGNATION;
      return ladder;
    }
    if (next_rms > current) continue;  // small increase: reject this order
    stage.residual_rms = next_rms;
    residual = std::move(next);
    current = next_rms;
    ladder.stages.push_back(std::move(stage));
    if (current <= options.tol) {
      ladder.terminated_reason = TerminationReason::TOL_REACHED;
      return ladder;
    }
  }
  ladder.terminated_reason = TerminationReason::MAX_ORDER;
  return ladder;
}

SeriesModel mr_joint_fit(const PointCloud& cloud, LadderFamily family,
                         const std::vector<Point>& centers, int max_order, double regularization) {
  if (max_order < 1) throw ConfigError("max order must be >= 1");
  std::vector<Point> all_centers;
  std::vector<KernelSpec> specs;
  for (int m = 1; m <= max_order; ++m) {
    for (const auto& c : centers) {
      all_centers.push_back(c);
      specs.push_back(ladder_spec(family, m));
    }
  }
  return fit(cloud, all_centers, specs, regularization);
}

void write_ladder_report(std::ostream& out, const MRLadder& ladder) {
  write_csv_header(out, {"stage", "residual_rms", "n_terms", "thresholded"});
  out << "0," << format_double(ladder.initial_residual_rms) << ",0,0\n";
  for (const auto& stage : ladder.stages) {
    std::size_t nonzero = 0;
    for (double b : stage.coefficients) nonzero += b != 0.0 ? 1 : 0;
    out << stage.m << ',' << format_double(stage.residual_rms) << ',' << nonzero << ','
        << stage.thresholded << '\n';
  }
}

std::string to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::TOL_REACHED: return "TOL_REACHED";
    case TerminationReason::MAX_ORDER: return "MAX_ORDER";
    case TerminationReason::STAGNATION: return "STAGNATION";
  }
  return "UNKNOWN";
}

LadderFamily parse_ladder_family(const std::string& text) {
  if (text == "LAPLACE_2D") return LadderFamily::LAPLACE_2D;
  if (text == "LAPLACE_3D") return LadderFamily::LAPLACE_3D;
  throw ConfigError("unknown ladder family '" + text + "' (LAPLACE_2D or LAPLACE_3D)");
}

GridSamples apply_composite_operator(const GridSamples& f, const std::vector<OperatorFactor>& factors) {
  if (f.dim != 1 && f.dim != 2) throw DimensionError("composite operator grids are 1D or 2D");
  if (f.values.size() != f.nx * f.ny) throw DimensionError("grid values do not match its shape");
  if (!(f.h > 0.0)) throw DomainError("grid spacing must be > 0");
  const std::size_t needed = 4 * factors.size() + 1;
  if (f.nx < needed || (f.dim == 2 && f.ny < needed)) {
    throw DomainError("grid too small for the requested number of operator factors");
  }
  GridSamples current = f;
  for (const auto& factor : factors) current = apply_factor(current, factor);
  return current;
}

ParticularSolution mr_particular_solution(const PointCloud& source, double lambda,
                                          const std::vector<Point>& centers, int M,
                                          double regularization) {
  source.check();
  if (!source.has_values()) throw ConfigError("source needs sample values (column f)");
  if (!(lambda > 0.0)) throw ConfigError("lambda must be > 0");
  if (M < 1) throw ConfigError("M must be >= 1");
  ParticularSolution out;
  const double f_rms = rms(source.values);
  if (f_rms == 0.0) return out;

  std::vector<double> remaining = source.values;
  double previous = sup_norm(remaining) / f_rms;
  for (int m = 0; m < M; ++m) {
    KernelSpec fit_spec;
    fit_spec.family = Family::HELMHOLTZ;
    fit_spec.kind = Kind::GENERAL;
    fit_spec.n = static_cast<double>(source.dim());
    fit_spec.m = m;
    fit_spec.scale = lambda;
    const std::vector<KernelSpec> specs(centers.size(), fit_spec);
    const Eigen::MatrixXd A = assemble(source.points, centers, specs);
    const Eigen::VectorXd beta = solve_least_squares(A, to_vector(remaining), regularization);
    const Eigen::VectorXd fitted = A * beta;
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] -= fitted(static_cast<Eigen::Index>(i));

    KernelSpec lifted = fit_spec;
    lifted.m = m + 1;
    for (std::size_t k = 0; k < centers.size(); ++k) {
      out.model.terms.push_back({centers[k], lifted, lambda * beta(static_cast<Eigen::Index>(k))});
    }
    const double r = sup_norm(remaining) / f_rms;
    out.residual_history.push_back(r);
    if (r > kStagnationFactor * previous) out.diverged = true;
    previous = r;
  }
  out.r_M = out.residual_history.back();
  out.model.fit_report.residual_rms = rms(remaining);
  out.model.fit_report.regularization = regularization;
  return out;
}

}  // namespace dfw
