#include "dfw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dfw/errors.hpp"

namespace dfw {
namespace {

double squared_distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double time_gap(const Point& a, const Point& b) {
  if (!a.has_time() || !b.has_time()) throw DomainError("time coordinate required");
  return *a.t() - *b.t();
}

}  // namespace

Point::Point(std::vector<double> coords, std::optional<double> t)
    : coords_(std::move(coords)), t_(t) {
  if (coords_.empty() || coords_.size() > kMaxPointDimension) {
    throw DimensionError("point dimension must be in [1, 16], got " +
                         std::to_string(coords_.size()));
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");
  }
  if (t_ && !std::isfinite(*t_)) throw DomainError("point time must be finite");
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::with_time(double t) const { return Point(coords_, t); }

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

AnisotropyMatrix::AnisotropyMatrix(const Eigen::MatrixXd& kappa) : kappa_(kappa) {
  if (kappa.rows() == 0 || kappa.rows() != kappa.cols()) {
    throw DomainError("anisotropy matrix must be square and non-empty");
  }
  const double scale = kappa.cwiseAbs().maxCoeff();
  if ((kappa - kappa.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale)) {
    throw DomainError("anisotropy matrix must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(kappa);
  if (llt.info() != Eigen::Success) throw DomainError("anisotropy matrix must be positive definite");
  const Eigen::VectorXd diag = llt.matrixL().toDenseMatrix().diagonal();
  if ((diag.array() <= 0.0).any()) throw DomainError("anisotropy matrix must be positive definite");
  determinant_ = diag.array().square().prod();
  inverse_ = llt.solve(Eigen::MatrixXd::Identity(kappa.rows(), kappa.cols()));
}

AnisotropyMatrix AnisotropyMatrix::identity(std::size_t n) {
  const auto size = static_cast<Eigen::Index>(n);
  return AnisotropyMatrix(Eigen::MatrixXd::Identity(size, size));
}

double euclidean(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

double geodesic(const Point& a, const Point& b, const AnisotropyMatrix& kappa) {
  require_same_dim(a, b);
  if (kappa.dim() != a.dim()) throw DimensionError("anisotropy matrix dimension mismatch");
  Eigen::VectorXd d(static_cast<Eigen::Index>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) d(static_cast<Eigen::Index>(i)) = a[i] - b[i];
  const double q = d.dot(kappa.inverse() * d);
  return std::sqrt(std::max(0.0, q));
}

double fractional_distance(const Point& a, const Point& b, double s) {
  require_same_dim(a, b);
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("fractional distance requires s > 0");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::pow(std::abs(a[i] - b[i]), s);
  return std::pow(sum, 1.0 / s);
}

std::optional<double> pseudo_euclidean(const Point& a, const Point& b, double c) {
  const double dt = time_gap(a, b);
  const double radicand = squared_distance(a, b) - c * c * dt * dt;
  if (radicand < 0.0) return std::nullopt;
  return std::sqrt(radicand);
}

ConeArgument wave_cone_argument(const Point& a, const Point& b, double c) {
  const double dt = time_gap(a, b);
  const double radicand = c * c * dt * dt - squared_distance(a, b);
  if (radicand > 0.0) return {std::sqrt(radicand), true};
  return {0.0, false};
}

double direction_projection(const Point& a, const Point& b, const std::vector<double>& v) {
  require_same_dim(a, b);
  if (v.size() != a.dim()) throw DimensionError("direction vector dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += v[i] * (a[i] - b[i]);
  return sum;
}

}  // namespace dfw
