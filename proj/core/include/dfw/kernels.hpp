#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dfw/geometry.hpp"

namespace dfw {

enum class Family {
  LAPLACE,
  HELMHOLTZ,
  MOD_HELMHOLTZ,
  CONV_DIFF,
  COMPOSITE_CD_LAPLACE,
  HEAT,
  SCHRODINGER,
  POISSON,
  POISSON_TRUNCATED,
  GAUSS_HEAT,
  DIFFUSION_RBF,
  TRANSLATE_HARMONIC,
  HARTLEY,
  GEODESIC_LAPLACE,
  GEODESIC_HEAT,
  GEODESIC_HELMHOLTZ,
  AXISYM_LAPLACE,
  INFINITE_DIFFUSION,
};

enum class Kind { FUNDAMENTAL, GENERAL };

/// Prefactor convention for the modified Helmholtz kernels. PLAIN is the
/// plain (1/2pi)(2 pi mu r)^{1-n/2} form; MU_SCALED additionally multiplies by
/// mu^{n-1/2} (and uses sqrt(mu)/2 for n = 1).
enum class Normalization { MU_SCALED, PLAIN };

/// Which translate-invariant harmonic function: exp(-a (dx + i dy)^2) or
/// exp(a (dx + i dy)).
enum class TranslateVariant { QUADRATIC, LINEAR };

enum class DistanceMode { EUCLIDEAN, FRACTIONAL, WAVE_CONE, PSEUDO_EUCLIDEAN };

enum class MqKind { POISSON, POISSON_TRUNCATED, GAUSS_HEAT, DIFFUSION_RBF, INFINITE_DIFFUSION };
enum class TimeSpaceKind { HEAT, SCHRODINGER };
enum class GeodesicKind { LAPLACE, HEAT, HELMHOLTZ };

/// Result of a kernel evaluation. When `singular` is set the point lies on
/// the kernel's singular set and re/im are NaN.
struct KernelValue {
  double re = 0.0;
  double im = 0.0;
  bool singular = false;

  static KernelValue real(double v) { return {v, 0.0, false}; }
  static KernelValue complex(std::complex<double> z) { return {z.real(), z.imag(), false}; }
  static KernelValue singular_point();

  std::complex<double> value() const { return {re, im}; }
  double magnitude() const { return std::abs(value()); }
  double phase() const { return std::arg(value()); }
};

/// Parameter bundle selecting and configuring one kernel.
///
/// `scale` is lambda (HELMHOLTZ, HARTLEY, GEODESIC_HELMHOLTZ), mu
/// (MOD_HELMHOLTZ), s (POISSON*), beta (GAUSS_HEAT) or alpha (DIFFUSION_RBF,
/// TRANSLATE_HARMONIC). CONV_DIFF and COMPOSITE_CD_LAPLACE derive their scale
/// from D, k and the direction vector. HEAT uses `conductivity`;
/// INFINITE_DIFFUSION uses `C`.
struct KernelSpec {
  Family family = Family::LAPLACE;
  Kind kind = Kind::FUNDAMENTAL;
  double n = 2.0;
  int m = 0;
  double scale = 1.0;
  std::vector<double> direction;
  double D = 1.0;
  double k = 0.0;
  double conductivity = 1.0;
  double c = 1.0;
  double C = 0.0;
  std::optional<AnisotropyMatrix> anisotropy;
  DistanceMode distance_mode = DistanceMode::EUCLIDEAN;
  double distance_param = 2.0;
  Normalization normalization = Normalization::PLAIN;
  double exponent_sign = -1.0;
  TranslateVariant variant = TranslateVariant::QUADRATIC;
  double mass = 1.0;
  double hbar = 1.0;

  /// Throws ConfigError for combinations without a formula.
  void validate() const;
};

bool is_radial(Family family);
bool is_complex_valued(const KernelSpec& spec);
/// True when the kernel has a singular set at zero distance.
bool is_singular_at_origin(const KernelSpec& spec);

/// Evaluates the kernel between evaluation point x and center.
KernelValue evaluate(const KernelSpec& spec, const Point& x, const Point& center);

/// Radial families only: evaluate at distance r.
KernelValue evaluate_radial(const KernelSpec& spec, double r);

/// Laplace fundamental solutions. m = 0 for any n > 0 (plus the constant
/// shift -C/S_n); m >= 1 only for n = 2 or 3, normalized so that the radial
/// Laplacian of order m gives order m - 1.
KernelValue eval_laplace(double n, int m, double r, double C = 0.0);

/// Magnitude of the radial derivative of the m = 0 Laplace kernel,
/// 1/(S_n r^{n-1}). The kernel decreases in r for n <= 2 and increases for n > 2.
double eval_laplace_radial_derivative(double n, double r);

/// A_m r^{m+1-n/2} J_{n/2-1+m}(lambda r) (GENERAL) or the same with H^(1)
/// (FUNDAMENTAL), A_m = 1/(2^m m! lambda^{2m}).
KernelValue eval_helmholtz(double n, int m, double lambda, double r, Kind kind);

/// Normalized Helmholtz fundamental solution
/// (i/4)(lambda/(2 pi r))^{n/2-1} H^(1)_{n/2-1}(lambda r), n >= 2.
KernelValue eval_helmholtz_fundamental_normalized(double n, double lambda, double r);

KernelValue eval_mod_helmholtz(double n, double mu, double r, Kind kind,
                               Normalization normalization = Normalization::PLAIN);

/// rho = sqrt((|v|/2D)^2 + k/D).
double conv_diff_rho(double D, const std::vector<double>& v, double k);

/// exp(sign v.(x - center)/2D) times the modified Helmholtz kernel with
/// mu = rho. sign = -1 is the convention solving D lap u + v.grad u - k u = 0.
KernelValue eval_conv_diff(double n, double D, const std::vector<double>& v, double k,
                           const Point& x, const Point& center, Kind kind,
                           double exponent_sign = -1.0);

/// Laplace fundamental solution minus the convection-diffusion fundamental
/// solution.
KernelValue eval_composite_cd_laplace(double n, double D, const std::vector<double>& v, double k,
                                      const Point& x, const Point& center,
                                      double exponent_sign = -1.0);

struct TimeSpaceParams {
  double conductivity = 1.0;
  double mass = 1.0;
  double hbar = 1.0;
};

/// Heat kernel or Schroedinger kernel between (x, t) and (xi, tau); zero for
/// t <= tau.
KernelValue eval_timespace(TimeSpaceKind kind, double n, const TimeSpaceParams& params,
                           const Point& x, const Point& xi);

/// Shape-parameter kernels. `shape` is s, beta or alpha; INFINITE_DIFFUSION
/// uses C instead and requires C > 0.
double eval_mq_family(MqKind kind, double n, double shape, double r, double C = 0.0);

/// Kernels on the anisotropic distance R, scaled by det(kappa)^{-1/2}.
/// HEAT needs time coordinates; HELMHOLTZ needs n >= 2.
KernelValue eval_geodesic(GeodesicKind kind, double n, const AnisotropyMatrix& kappa,
                          double lambda, const Point& x, const Point& xi);

/// Ring-source Laplace kernel 4K(s)/sqrt(p+q) between (x_i, y_i) and
/// (x_k, y_k), x = radial coordinate > 0, y = axial coordinate.
KernelValue eval_axisym_laplace(double x_i, double y_i, double x_k, double y_k);

KernelValue eval_translate_harmonic(TranslateVariant which, double alpha, double x, double y,
                                    double x_k, double y_k);

/// (lambda^{n-1/2}/4)(2 pi lambda r)^{1-n/2}[J + Y]_{n/2-1}(lambda r), n >= 2.
KernelValue eval_hartley_basis(double n, double lambda, double r);

std::string to_string(Family family);
std::string to_string(Kind kind);
std::string to_string(Normalization normalization);
std::string to_string(TranslateVariant variant);
std::string to_string(DistanceMode mode);
Family parse_family(const std::string& text);
Kind parse_kind(const std::string& text);
Normalization parse_normalization(const std::string& text);
TranslateVariant parse_variant(const std::string& text);

}  // namespace dfw
