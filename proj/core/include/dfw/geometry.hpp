#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace dfw {

inline constexpr std::size_t kMaxPointDimension = 16;

/// A point in R^n (1 <= n <= 16) with an optional time coordinate.
class Point {
 public:
  Point() = default;
  /// Throws DimensionError for n outside [1, 16], DomainError for non-finite input.
  explicit Point(std::vector<double> coords, std::optional<double> t = std::nullopt);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::optional<double>& t() const { return t_; }
  bool has_time() const { return t_.has_value(); }

  Point with_time(double t) const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
  std::optional<double> t_;
};

/// Symmetric positive-definite conductivity matrix with cached inverse and
/// determinant.
class AnisotropyMatrix {
 public:
  /// Throws DomainError if kappa is not square, symmetric within 1e-12
  /// (relative) or positive definite.
  explicit AnisotropyMatrix(const Eigen::MatrixXd& kappa);
  static AnisotropyMatrix identity(std::size_t n);

  std::size_t dim() const { return static_cast<std::size_t>(kappa_.rows()); }
  const Eigen::MatrixXd& kappa() const { return kappa_; }
  const Eigen::MatrixXd& inverse() const { return inverse_; }
  double determinant() const { return determinant_; }

 private:
  Eigen::MatrixXd kappa_;
  Eigen::MatrixXd inverse_;
  double determinant_ = 1.0;
};

double euclidean(const Point& a, const Point& b);

/// R = sqrt(d^T kappa^{-1} d), d = a - b.
double geodesic(const Point& a, const Point& b, const AnisotropyMatrix& kappa);

/// (sum_i |a_i - b_i|^s)^{1/s}. Absolute differences keep non-integer s real.
double fractional_distance(const Point& a, const Point& b, double s);

/// sqrt(|dx|^2 - c^2 dt^2), or nullopt outside the light cone (negative radicand).
std::optional<double> pseudo_euclidean(const Point& a, const Point& b, double c);

struct ConeArgument {
  double value = 0.0;
  bool inside = false;
};

/// sqrt(c^2 dt^2 - r^2) inside the cone, 0 (inside = false) elsewhere.
ConeArgument wave_cone_argument(const Point& a, const Point& b, double c);

/// v . (a - b).
double direction_projection(const Point& a, const Point& b, const std::vector<double>& v);

/// Throws DimensionError if a and b differ in dimension.
void require_same_dim(const Point& a, const Point& b);

}  // namespace dfw
