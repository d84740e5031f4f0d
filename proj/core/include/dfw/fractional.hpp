#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dfw {

/// Dirichlet finite-difference -lap on a 1D or 2D uniform grid, with its
/// eigendecomposition computed once at construction.
class GridOperator {
 public:
  GridOperator(int dim, int n_per_side, double h);

  int dim() const { return dim_; }
  int n_per_side() const { return n_; }
  double h() const { return h_; }
  Eigen::Index size() const { return A_.rows(); }
  const Eigen::MatrixXd& matrix() const { return A_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }  // ascending
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

 private:
  int dim_;
  int n_;
  double h_;
  Eigen::MatrixXd A_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

inline constexpr Eigen::Index kMaxGridUnknowns = 4096;

GridOperator build_discrete_laplacian(int dim, int n_per_side, double h);

/// V diag(lambda^{y/2}) V^T for y in [0, 2].
Eigen::MatrixXd matrix_fractional_power(const GridOperator& op, double y);

/// A^{y/2} p for y in (0, 2], computed in the eigenbasis.
Eigen::VectorXd apply_fractional_laplacian(const GridOperator& op, double y, const Eigen::VectorXd& p);

struct PowerLawFit {
  double alpha0 = 0.0;
  double y = 0.0;
  double rms_log_residual = 0.0;
  bool out_of_range = false;  // y outside [0, 2]
};

struct AttenuationSample {
  double omega = 0.0;
  double alpha = 0.0;
};

/// Least squares line through (ln omega, ln alpha): alpha = alpha0 omega^y.
PowerLawFit fit_power_law(const std::vector<AttenuationSample>& samples);

/// ln N / ln q.
double hausdorff_dimension(double N, double q);

/// D C_p mu rho / k.
double peclet(double D, double C_p, double mu, double rho, double k);

/// CSV with columns omega,alpha.
std::vector<AttenuationSample> read_attenuation_csv(std::istream& in);
std::vector<AttenuationSample> read_attenuation_csv_file(const std::string& path);
void write_attenuation_csv(std::ostream& out, const std::vector<AttenuationSample>& samples);

}  // namespace dfw
