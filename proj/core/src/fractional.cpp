#include "dfw/fractional.hpp"

#include <cmath>
#include <ostream>
#include <set>

#include "dfw/errors.hpp"
#include "dfw/text_io.hpp"

namespace dfw {
namespace {

void check_exponent(double y, bool allow_zero) {
  if (!std::isfinite(y) || y > 2.0 || y < 0.0 || (!allow_zero && y == 0.0)) {
    throw DomainError(allow_zero ? "fractional exponent y must lie in [0, 2]"
                                 : "fractional exponent y must lie in (0, 2]");
  }
}

Eigen::VectorXd spectral_power(const GridOperator& op, double y) {
  if (y == 0.0) return Eigen::VectorXd::Ones(op.size());
  if (y == 2.0) return op.eigenvalues();
  return op.eigenvalues().array().pow(0.5 * y).matrix();
}

}  // namespace

GridOperator::GridOperator(int dim, int n_per_side, double h) : dim_(dim), n_(n_per_side), h_(h) {
  if (dim != 1 && dim != 2) throw DimensionError("discrete Laplacian grids are 1D or 2D");
  if (n_per_side < 3) throw DomainError("need at least 3 interior points per side");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid spacing must be > 0");
  const Eigen::Index n = n_per_side;
  const Eigen::Index N = dim == 1 ? n : n * n;
  if (N > kMaxGridUnknowns) {
    throw DomainError("grid has " + std::to_string(N) + " unknowns; dense limit is " +
                      std::to_string(kMaxGridUnknowns));
  }
  const double s = 1.0 / (h * h);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    T(i, i) = 2.0 * s;
    if (i + 1 < n) T(i, i + 1) = T(i + 1, i) = -s;
  }
  if (dim == 1) {
    A_ = T;
  } else {
    // I (x) T + T (x) I on an x-fastest ordering
    A_ = Eigen::MatrixXd::Zero(N, N);
    for (Eigen::Index j = 0; j < n; ++j) {
      A_.block(j * n, j * n, n, n) += T;
      for (Eigen::Index jj = 0; jj < n; ++jj) {
        if (T(j, jj) == 0.0) continue;
        for (Eigen::Index i = 0; i < n; ++i) A_(j * n + i, jj * n + i) += T(j, jj);
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A_);
  if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
  if (!(eigenvalues_(0) > 0.0)) throw NumericError("discrete Laplacian is not positive definite");
}

GridOperator build_discrete_laplacian(int dim, int n_per_side, double h) {
  return GridOperator(dim, n_per_side, h);
}

Eigen::MatrixXd matrix_fractional_power(const GridOperator& op, double y) {
  check_exponent(y, true);
  const Eigen::MatrixXd& V = op.eigenvectors();
  return V * spectral_power(op, y).asDiagonal() * V.transpose();
}

Eigen::VectorXd apply_fractional_laplacian(const GridOperator& op, double y, const Eigen::VectorXd& p) {
  check_exponent(y, false);
  if (p.size() != op.size()) {
    throw DimensionError("vector has " + std::to_string(p.size()) + " entries; grid has " +
                         std::to_string(op.size()));
  }
  const Eigen::MatrixXd& V = op.eigenvectors();
  const Eigen::VectorXd coeffs = V.transpose() * p;
  return V * spectral_power(op, y).cwiseProduct(coeffs);
}

PowerLawFit fit_power_law(const std::vector<AttenuationSample>& samples) {
  std::set<double> distinct;
  for (const auto& s : samples) {
    if (!(s.omega > 0.0) || !(s.alpha > 0.0) || !std::isfinite(s.omega) || !std::isfinite(s.alpha)) {
      throw DomainError("attenuation samples must have omega > 0 and alpha > 0");
    }
    distinct.insert(s.omega);
  }
  if (distinct.size() < 2) throw DomainError("power-law fit needs at least 2 distinct omega values");

  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = std::log(samples[static_cast<std::size_t>(i)].omega);
    b(i) = std::log(samples[static_cast<std::size_t>(i)].alpha);
  }
  const Eigen::Vector2d coef = X.colPivHouseholderQr().solve(b);
  PowerLawFit out;
  out.alpha0 = std::exp(coef(0));
  out.y = coef(1);
  out.rms_log_residual = std::sqrt((X * coef - b).squaredNorm() / static_cast<double>(n));
  out.out_of_range = out.y < 0.0 || out.y > 2.0;
  return out;
}

double hausdorff_dimension(double N, double q) {
  if (!(N > 0.0) || !(q > 0.0)) throw DomainError("Hausdorff dimension needs N > 0 and q > 0");
  if (q == 1.0) throw DomainError("Hausdorff dimension undefined for q = 1");
  return std::log(N) / std::log(q);
}

double peclet(double D, double C_p, double mu, double rho, double k) {
  if (!(k > 0.0)) throw DomainError("thermal conductivity k must be > 0");
  if (!(D > 0.0) || !(C_p > 0.0) || !(mu > 0.0) || !(rho > 0.0)) {
    throw DomainError("Peclet parameters must be > 0");
  }
  return D * C_p * mu * rho / k;
}

namespace {

std::vector<AttenuationSample> samples_from_table(const CsvTable& table) {
  const std::size_t omega = table.column("omega");
  const std::size_t alpha = table.column("alpha");
  std::vector<AttenuationSample> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.push_back({row[omega], row[alpha]});
  return out;
}

}  // namespace

std::vector<AttenuationSample> read_attenuation_csv(std::istream& in) {
  return samples_from_table(read_csv(in));
}

std::vector<AttenuationSample> read_attenuation_csv_file(const std::string& path) {
  return samples_from_table(read_csv_file(path));
}

void write_attenuation_csv(std::ostream& out, const std::vector<AttenuationSample>& samples) {
  write_csv_header(out, {"omega", "alpha"});
  for (const auto& s : samples) write_csv_row(out, {s.omega, s.alpha});
}

}  // namespace dfw
