#include "dfw/kernels.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "dfw/errors.hpp"
#include "dfw/specfun.hpp"

namespace dfw {
namespace {

using specfun::BesselKind;
using specfun::bessel;
constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
using Complex = std::complex<double>;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

void require_distance(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("distance must be finite and >= 0");
}

bool is_integer_dim(double n, double value) { return n == value; }

// Laplace fundamental solution, m = 0, without the constant shift.
double laplace_base(double n, double r) {
  if (n == 1.0) return -0.5 * r;
  if (n == 2.0) return -std::log(r) / (2.0 * kPi);
  return -std::pow(r, 2.0 - n) / ((n - 2.0) * specfun::unit_sphere_area(n));
}

// (1/2pi)(2 pi mu r)^{-nu} Z_nu(mu r), nu = n/2 - 1, Z = I or K; n = 1 uses
// the exponential forms.
KernelValue modified_radial(double n, double mu, double r, bool fundamental) {
  if (n == 1.0) {
    const double e = fundamental ? std::exp(-mu * r) : std::exp(mu * r);
    if (!std::isfinite(e)) throw RangeError("modified Helmholtz kernel overflow");
    return KernelValue::real(e / (2.0 * mu));
  }
  const double nu = 0.5 * n - 1.0;
  if (r == 0.0) {
    if (!fundamental) {
      return KernelValue::real(std::pow(4.0 * kPi, -nu) / (2.0 * kPi * specfun::gamma(nu + 1.0)));
    }
    if (n >= 2.0) return KernelValue::singular_point();
    // K_{|nu|}(z) ~ Gamma(|nu|)/2 (z/2)^{-|nu|} cancels the r^{|nu|} prefactor.
    const double a = -nu;
    return KernelValue::real(specfun::gamma(a) * std::pow(4.0 * kPi, a) / (4.0 * kPi));
  }
  const double z = mu * r;
  const double bessel_value = bessel(fundamental ? BesselKind::K : BesselKind::I, nu, z).value;
  const double value = std::pow(2.0 * kPi * z, -nu) * bessel_value / (2.0 * kPi);
  if (!std::isfinite(value)) throw RangeError("modified Helmholtz kernel overflow");
  return KernelValue::real(value);
}

double helmholtz_amplitude(int m, double lambda) {
  double a = 1.0;
  for (int i = 1; i <= m; ++i) a /= 2.0 * i * lambda * lambda;
  return a;
}

double euclidean_with_mode(const KernelSpec& spec, const Point& x, const Point& center,
                           bool& outside) {
  outside = false;
  switch (spec.distance_mode) {
    case DistanceMode::EUCLIDEAN:
      return euclidean(x, center);
    case DistanceMode::FRACTIONAL:
      return fractional_distance(x, center, spec.distance_param);
    case DistanceMode::WAVE_CONE: {
      const ConeArgument arg = wave_cone_argument(x, center, spec.distance_param);
      outside = !arg.inside;
      return arg.value;
    }
    case DistanceMode::PSEUDO_EUCLIDEAN: {
      const auto d = pseudo_euclidean(x, center, spec.distance_param);
      outside = !d.has_value();
      return d.value_or(0.0);
    }
  }
  return 0.0;
}

MqKind mq_kind_of(Family family) {
  switch (family) {
    case Family::POISSON: return MqKind::POISSON;
    case Family::POISSON_TRUNCATED: return MqKind::POISSON_TRUNCATED;
    case Family::GAUSS_HEAT: return MqKind::GAUSS_HEAT;
    case Family::DIFFUSION_RBF: return MqKind::DIFFUSION_RBF;
    case Family::INFINITE_DIFFUSION: return MqKind::INFINITE_DIFFUSION;
    default: break;
  }
  throw ConfigError("not a shape-parameter family: " + to_string(family));
}

constexpr std::array<std::pair<Family, const char*>, 18> kFamilyNames = {{
    {Family::LAPLACE, "LAPLACE"},
    {Family::HELMHOLTZ, "HELMHOLTZ"},
    {Family::MOD_HELMHOLTZ, "MOD_HELMHOLTZ"},
    {Family::CONV_DIFF, "CONV_DIFF"},
    {Family::COMPOSITE_CD_LAPLACE, "COMPOSITE_CD_LAPLACE"},
    {Family::HEAT, "HEAT"},
    {Family::SCHRODINGER, "SCHRODINGER"},
    {Family::POISSON, "POISSON"},
    {Family::POISSON_TRUNCATED, "POISSON_TRUNCATED"},
    {Family::GAUSS_HEAT, "GAUSS_HEAT"},
    {Family::DIFFUSION_RBF, "DIFFUSION_RBF"},
    {Family::TRANSLATE_HARMONIC, "TRANSLATE_HARMONIC"},
    {Family::HARTLEY, "HARTLEY"},
    {Family::GEODESIC_LAPLACE, "GEODESIC_LAPLACE"},
    {Family::GEODESIC_HEAT, "GEODESIC_HEAT"},
    {Family::GEODESIC_HELMHOLTZ, "GEODESIC_HELMHOLTZ"},
    {Family::AXISYM_LAPLACE, "AXISYM_LAPLACE"},
    {Family::INFINITE_DIFFUSION, "INFINITE_DIFFUSION"},
}};

}  // namespace

KernelValue KernelValue::singular_point() { return {kNaN, kNaN, true}; }

KernelValue eval_laplace(double n, int m, double r, double C) {
  require_positive(n, "dimension n");
  require_distance(r);
  if (m < 0) throw DomainError("order m must be >= 0");
  if (m == 0) {
    if (r == 0.0) {
      if (n >= 2.0) return KernelValue::singular_point();
      return KernelValue::real(-C / specfun::unit_sphere_area(n));
    }
    return KernelValue::real(laplace_base(n, r) - C / specfun::unit_sphere_area(n));
  }
  if (is_integer_dim(n, 2.0)) {
    double a = 1.0;
    double b = 0.0;
    for (int i = 1; i <= m; ++i) {
      const double denom = 4.0 * i * i;
      b = (b + a / i) / denom;
      a /= denom;
    }
    if (r == 0.0) return KernelValue::real(0.0);
    return KernelValue::real(-std::pow(r, 2.0 * m) * (a * std::log(r) - b) / (2.0 * kPi));
  }
  if (is_integer_dim(n, 3.0)) {
    double factorial = 1.0;
    for (int i = 2; i <= 2 * m; ++i) factorial *= i;
    return KernelValue::real(-std::pow(r, 2.0 * m - 1.0) / (4.0 * kPi * factorial));
  }
  throw ConfigError("high-order Laplace kernels exist only for n = 2 or 3");
}

double eval_laplace_radial_derivative(double n, double r) {
  require_positive(n, "dimension n");
  if (!(r > 0.0)) throw DomainError("radial derivative requires r > 0");
  return 1.0 / (specfun::unit_sphere_area(n) * std::pow(r, n - 1.0));
}

KernelValue eval_helmholtz(double n, int m, double lambda, double r, Kind kind) {
  require_positive(n, "dimension n");
  require_positive(lambda, "lambda");
  require_distance(r);
  if (m < 0) throw DomainError("order m must be >= 0");
  const double amp = helmholtz_amplitude(m, lambda);
  const double order = 0.5 * n - 1.0 + m;
  if (r == 0.0) {
    if (kind == Kind::FUNDAMENTAL) return KernelValue::singular_point();
    if (m > 0) return KernelValue::real(0.0);
    return KernelValue::real(std::pow(0.5 * lambda, order) / specfun::gamma(order + 1.0));
  }
  const double radial = amp * std::pow(r, m + 1.0 - 0.5 * n);
  if (kind == Kind::GENERAL) {
    return KernelValue::real(radial * bessel(BesselKind::J, order, lambda * r).value);
  }
  const auto h = bessel(BesselKind::H1, order, lambda * r);
  return KernelValue::complex(radial * h.complex());
}

KernelValue eval_helmholtz_fundamental_normalized(double n, double lambda, double r) {
  require_positive(lambda, "lambda");
  require_distance(r);
  if (!(n >= 2.0)) throw DomainError("normalized Helmholtz fundamental solution needs n >= 2");
  if (r == 0.0) return KernelValue::singular_point();
  const double nu = 0.5 * n - 1.0;
  const double pre = std::pow(lambda / (2.0 * kPi * r), nu) / 4.0;
  const Complex h = bessel(BesselKind::H1, nu, lambda * r).complex();
  return KernelValue::complex(Complex(0.0, pre) * h);
}

KernelValue eval_mod_helmholtz(double n, double mu, double r, Kind kind,
                               Normalization normalization) {
  require_positive(n, "dimension n");
  require_positive(mu, "mu");
  require_distance(r);
  const bool fundamental = kind == Kind::FUNDAMENTAL;
  if (normalization == Normalization::MU_SCALED && n == 1.0) {
    const double e = fundamental ? std::exp(-mu * r) : std::exp(mu * r);
    if (!std::isfinite(e)) throw RangeError("modified Helmholtz kernel overflow");
    return KernelValue::real(0.5 * std::sqrt(mu) * e);
  }
  KernelValue v = modified_radial(n, mu, r, fundamental);
  if (normalization == Normalization::MU_SCALED && !v.singular) v.re *= std::pow(mu, n - 0.5);
  return v;
}

double conv_diff_rho(double D, const std::vector<double>& v, double k) {
  require_positive(D, "diffusivity D");
  if (!(k >= 0.0)) throw DomainError("reaction k must be >= 0");
  double v2 = 0.0;
  for (double vi : v) v2 += vi * vi;
  return std::sqrt(v2 / (4.0 * D * D) + k / D);
}

KernelValue eval_conv_diff(double n, double D, const std::vector<double>& v, double k,
                           const Point& x, const Point& center, Kind kind,
                           double exponent_sign) {
  const double rho = conv_diff_rho(D, v, k);
  if (!(rho > 0.0)) throw DomainError("convection-diffusion kernel needs v != 0 or k > 0");
  const double r = euclidean(x, center);
  double proj = 0.0;
  if (!v.empty()) proj = direction_projection(x, center, v);
  KernelValue base = eval_mod_helmholtz(n, rho, r, kind, Normalization::PLAIN);
  if (base.singular) return base;
  base.re *= std::exp(exponent_sign * proj / (2.0 * D));
  if (!std::isfinite(base.re)) throw RangeError("convection-diffusion kernel overflow");
  return base;
}

KernelValue eval_composite_cd_laplace(double n, double D, const std::vector<double>& v, double k,
                                      const Point& x, const Point& center,
                                      double exponent_sign) {
  const KernelValue cd = eval_conv_diff(n, D, v, k, x, center, Kind::FUNDAMENTAL, exponent_sign);
  const KernelValue lap = eval_laplace(n, 0, euclidean(x, center));
  if (cd.singular || lap.singular) return KernelValue::singular_point();
  return KernelValue::real(lap.re - cd.re);
}

KernelValue eval_timespace(TimeSpaceKind kind, double n, const TimeSpaceParams& params,
                           const Point& x, const Point& xi) {
  require_positive(n, "dimension n");
  if (!x.has_time() || !xi.has_time()) throw DomainError("time-space kernels need time coordinates");
  const double dt = *x.t() - *xi.t();
  const double r2 = std::pow(euclidean(x, xi), 2);
  if (kind == TimeSpaceKind::HEAT) {
    require_positive(params.conductivity, "conductivity");
    if (dt <= 0.0) return KernelValue::real(0.0);
    const double kt = params.conductivity * dt;
    return KernelValue::real(std::exp(-r2 / (4.0 * kt)) / std::pow(4.0 * kPi * kt, 0.5 * n));
  }
  require_positive(params.mass, "mass");
  require_positive(params.hbar, "hbar");
  if (dt <= 0.0) return KernelValue::real(0.0);
  const double hb = params.hbar;
  const double amp = std::pow(params.mass / (2.0 * kPi * hb * dt), 0.5 * n) / (hb * std::sqrt(2.0));
  const double theta = params.mass * r2 / (2.0 * hb * dt);
  const Complex value = -Complex(1.0, 1.0) * amp * std::polar(1.0, theta);
  return KernelValue::complex(value);
}

double eval_mq_family(MqKind kind, double n, double shape, double r, double C) {
  require_distance(r);
  if (kind == MqKind::INFINITE_DIFFUSION) {
    require_positive(C, "constant C");
    return (2.0 * C - r) / std::pow(r + C, 4);
  }
  require_positive(shape, "shape parameter");
  switch (kind) {
    case MqKind::POISSON:
    case MqKind::POISSON_TRUNCATED: {
      require_positive(n, "dimension n");
      if (kind == MqKind::POISSON_TRUNCATED && r >= shape) return 0.0;
      const double h = 0.5 * (n + 1.0);
      const double cn = specfun::gamma(h) / std::pow(kPi, h);
      return cn * shape / std::pow(r * r + shape * shape, h);
    }
    case MqKind::GAUSS_HEAT:
      return std::exp(-r * r / (4.0 * shape)) / (2.0 * std::sqrt(kPi * shape));
    case MqKind::DIFFUSION_RBF:
      return std::exp(-shape * r);
    default:
      break;
  }
  throw DomainError("unknown shape-parameter kernel");
}

KernelValue eval_geodesic(GeodesicKind kind, double n, const AnisotropyMatrix& kappa,
                          double lambda, const Point& x, const Point& xi) {
  require_positive(n, "dimension n");
  const double R = geodesic(x, xi, kappa);
  const double pre = 1.0 / std::sqrt(kappa.determinant());
  switch (kind) {
    case GeodesicKind::LAPLACE: {
      KernelValue v = eval_laplace(n, 0, R);
      if (!v.singular) v.re *= pre;
      return v;
    }
    case GeodesicKind::HEAT: {
      if (!x.has_time() || !xi.has_time()) throw DomainError("geodesic heat kernel needs time");
      const double dt = *x.t() - *xi.t();
      if (dt <= 0.0) return KernelValue::real(0.0);
      return KernelValue::real(pre * std::exp(-R * R / (4.0 * dt)) /
                               std::pow(4.0 * kPi * dt, 0.5 * n));
    }
    case GeodesicKind::HELMHOLTZ: {
      KernelValue v = eval_helmholtz_fundamental_normalized(n, lambda, R);
      if (!v.singular) {
        v.re *= pre;
        v.im *= pre;
      }
      return v;
    }
  }
  throw DomainError("unknown geodesic kernel");
}

KernelValue eval_axisym_laplace(double x_i, double y_i, double x_k, double y_k) {
  if (!(x_i > 0.0) || !(x_k > 0.0)) throw DomainError("axisymmetric kernel needs radial coordinates > 0");
  const double dy = y_i - y_k;
  const double p = x_i * x_i + x_k * x_k + dy * dy;
  const double q = 2.0 * x_i * x_k;
  const double s = 2.0 * q / (p + q);
  if (s >= 1.0) return KernelValue::singular_point();
  return KernelValue::real(4.0 * specfun::elliptic_complete_first(s) / std::sqrt(p + q));
}

KernelValue eval_translate_harmonic(TranslateVariant which, double alpha, double x, double y,
                                    double x_k, double y_k) {
  require_positive(alpha, "alpha");
  const Complex z(x - x_k, y - y_k);
  const Complex w = which == TranslateVariant::QUADRATIC ? std::exp(-alpha * z * z) : std::exp(alpha * z);
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw RangeError("translate harmonic kernel overflow");
  }
  return KernelValue::complex(w);
}

KernelValue eval_hartley_basis(double n, double lambda, double r) {
  require_positive(lambda, "lambda");
  require_distance(r);
  if (!(n >= 2.0)) throw DomainError("Hartley basis needs n >= 2");
  if (r == 0.0) return KernelValue::singular_point();
  const double nu = 0.5 * n - 1.0;
  const double z = lambda * r;
  const double jy = bessel(BesselKind::J, nu, z).value + bessel(BesselKind::Y, nu, z).value;
  const double pre = std::pow(lambda, n - 0.5) / 4.0 * std::pow(2.0 * kPi * z, -nu);
  return KernelValue::real(pre * jy);
}

bool is_radial(Family family) {
  switch (family) {
    case Family::LAPLACE:
    case Family::HELMHOLTZ:
    case Family::MOD_HELMHOLTZ:
    case Family::POISSON:
    case Family::POISSON_TRUNCATED:
    case Family::GAUSS_HEAT:
    case Family::DIFFUSION_RBF:
    case Family::HARTLEY:
    case Family::INFINITE_DIFFUSION:
      return true;
    default:
      return false;
  }
}

bool is_complex_valued(const KernelSpec& spec) {
  switch (spec.family) {
    case Family::HELMHOLTZ:
      return spec.kind == Kind::FUNDAMENTAL;
    case Family::SCHRODINGER:
    case Family::TRANSLATE_HARMONIC:
    case Family::GEODESIC_HELMHOLTZ:
      return true;
    default:
      return false;
  }
}

bool is_singular_at_origin(const KernelSpec& spec) {
  switch (spec.family) {
    case Family::LAPLACE:
    case Family::GEODESIC_LAPLACE:
      return spec.m == 0 && spec.n >= 2.0;
    case Family::HELMHOLTZ:
      return spec.kind == Kind::FUNDAMENTAL;
    case Family::MOD_HELMHOLTZ:
    case Family::CONV_DIFF:
      return spec.kind == Kind::FUNDAMENTAL && spec.n >= 2.0;
    case Family::COMPOSITE_CD_LAPLACE:
    case Family::HARTLEY:
    case Family::GEODESIC_HELMHOLTZ:
    case Family::AXISYM_LAPLACE:
      return true;
    default:
      return false;
  }
}

KernelValue evaluate_radial(const KernelSpec& spec, double r) {
  switch (spec.family) {
    case Family::LAPLACE:
      return eval_laplace(spec.n, spec.m, r, spec.C);
    case Family::HELMHOLTZ:
      return eval_helmholtz(spec.n, spec.m, spec.scale, r, spec.kind);
    case Family::MOD_HELMHOLTZ:
      return eval_mod_helmholtz(spec.n, spec.scale, r, spec.kind, spec.normalization);
    case Family::HARTLEY:
      return eval_hartley_basis(spec.n, spec.scale, r);
    case Family::POISSON:
    case Family::POISSON_TRUNCATED:
    case Family::GAUSS_HEAT:
    case Family::DIFFUSION_RBF:
    case Family::INFINITE_DIFFUSION:
      return KernelValue::real(eval_mq_family(mq_kind_of(spec.family), spec.n, spec.scale, r, spec.C));
    default:
      break;
  }
  throw ConfigError("family " + to_string(spec.family) + " is not radial");
}

KernelValue evaluate(const KernelSpec& spec, const Point& x, const Point& center) {
  require_same_dim(x, center);
  if (is_radial(spec.family)) {
    bool outside = false;
    const double r = euclidean_with_mode(spec, x, center, outside);
    if (outside) return KernelValue::real(0.0);
    return evaluate_radial(spec, r);
  }
  switch (spec.family) {
    case Family::CONV_DIFF:
      return eval_conv_diff(spec.n, spec.D, spec.direction, spec.k, x, center, spec.kind,
                            spec.exponent_sign);
    case Family::COMPOSITE_CD_LAPLACE:
      return eval_composite_cd_laplace(spec.n, spec.D, spec.direction, spec.k, x, center,
                                       spec.exponent_sign);
    case Family::HEAT:
      return eval_timespace(TimeSpaceKind::HEAT, spec.n, {spec.conductivity, spec.mass, spec.hbar},
                            x, center);
    case Family::SCHRODINGER:
      return eval_timespace(TimeSpaceKind::SCHRODINGER, spec.n,
                            {spec.conductivity, spec.mass, spec.hbar}, x, center);
    case Family::GEODESIC_LAPLACE:
    case Family::GEODESIC_HEAT:
    case Family::GEODESIC_HELMHOLTZ: {
      const AnisotropyMatrix kappa =
          spec.anisotropy ? *spec.anisotropy : AnisotropyMatrix::identity(x.dim());
      const GeodesicKind kind = spec.family == Family::GEODESIC_LAPLACE ? GeodesicKind::LAPLACE
                                : spec.family == Family::GEODESIC_HEAT ? GeodesicKind::HEAT
                                                                        : GeodesicKind::HELMHOLTZ;
      return eval_geodesic(kind, spec.n, kappa, spec.scale, x, center);
    }
    case Family::AXISYM_LAPLACE:
      if (x.dim() != 2) throw DimensionError("axisymmetric kernel needs (radial, axial) points");
      return eval_axisym_laplace(x[0], x[1], center[0], center[1]);
    case Family::TRANSLATE_HARMONIC:
      if (x.dim() != 2) throw DimensionError("translate harmonic kernels are 2D");
      return eval_translate_harmonic(spec.variant, spec.scale, x[0], x[1], center[0], center[1]);
    default:
      break;
  }
  throw ConfigError("unsupported family " + to_string(spec.family));
}

void KernelSpec::validate() const {
  if (!(n > 0.0) || !std::isfinite(n)) throw ConfigError("n must be > 0");
  if (m < 0) throw ConfigError("m must be >= 0");
  const bool general_ok = family == Family::HELMHOLTZ || family == Family::MOD_HELMHOLTZ ||
                          family == Family::CONV_DIFF;
  if (kind == Kind::GENERAL && !general_ok) {
    throw ConfigError("family " + to_string(family) + " has no general solution");
  }
  if (m > 0) {
    if (family == Family::LAPLACE) {
      if (n != 2.0 && n != 3.0) throw ConfigError("high-order Laplace kernels need n = 2 or 3");
    } else if (family != Family::HELMHOLTZ) {
      throw ConfigError("order m >= 1 is only defined for LAPLACE and HELMHOLTZ");
    }
  }
  switch (family) {
    case Family::HELMHOLTZ:
    case Family::MOD_HELMHOLTZ:
    case Family::POISSON:
    case Family::POISSON_TRUNCATED:
    case Family::GAUSS_HEAT:
    case Family::DIFFUSION_RBF:
    case Family::TRANSLATE_HARMONIC:
    case Family::HARTLEY:
    case Family::GEODESIC_HELMHOLTZ:
      if (!(scale > 0.0) || !std::isfinite(scale)) throw ConfigError("scale must be > 0");
      break;
    default:
      break;
  }
  if ((family == Family::HARTLEY || family == Family::GEODESIC_HELMHOLTZ) && n < 2.0) {
    throw ConfigError("family " + to_string(family) + " needs n >= 2");
  }
  if (family == Family::CONV_DIFF || family == Family::COMPOSITE_CD_LAPLACE) {
    if (!(D > 0.0)) throw ConfigError("D must be > 0");
    if (!(k >= 0.0)) throw ConfigError("k must be >= 0");
    double v2 = 0.0;
    for (double vi : direction) v2 += vi * vi;
    if (v2 == 0.0 && k == 0.0) throw ConfigError("convection-diffusion kernels need v != 0 or k > 0");
  }
  if (family == Family::HEAT && !(conductivity > 0.0)) throw ConfigError("conductivity must be > 0");
  if (family == Family::SCHRODINGER && (!(mass > 0.0) || !(hbar > 0.0))) {
    throw ConfigError("mass and hbar must be > 0");
  }
  if (family == Family::INFINITE_DIFFUSION && !(C > 0.0)) throw ConfigError("C must be > 0");
  if (distance_mode != DistanceMode::EUCLIDEAN) {
    if (!is_radial(family)) throw ConfigError("distance_mode applies to radial families only");
    if (!(distance_param > 0.0)) throw ConfigError("distance_mode parameter must be > 0");
  }
  if (exponent_sign != 1.0 && exponent_sign != -1.0) throw ConfigError("exponent_sign must be +1 or -1");
}

std::string to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "UNKNOWN";
}

std::string to_string(Kind kind) { return kind == Kind::FUNDAMENTAL ? "FUNDAMENTAL" : "GENERAL"; }

std::string to_string(Normalization normalization) {
  return normalization == Normalization::MU_SCALED ? "MU_SCALED" : "PLAIN";
}

std::string to_string(TranslateVariant variant) {
  return variant == TranslateVariant::QUADRATIC ? "QUADRATIC" : "LINEAR";
}

std::string to_string(DistanceMode mode) {
  switch (mode) {
    case DistanceMode::EUCLIDEAN: return "EUCLIDEAN";
    case DistanceMode::FRACTIONAL: return "FRACTIONAL";
    case DistanceMode::WAVE_CONE: return "WAVE_CONE";
    case DistanceMode::PSEUDO_EUCLIDEAN: return "PSEUDO_EUCLIDEAN";
  }
  return "UNKNOWN";
}

Family parse_family(const std::string& text) {
  for (const auto& [f, name] : kFamilyNames) {
    if (text == name) return f;
  }
  throw ConfigError("unknown kernel family '" + text + "'");
}

Kind parse_kind(const std::string& text) {
  if (text == "FUNDAMENTAL") return Kind::FUNDAMENTAL;
  if (text == "GENERAL") return Kind::GENERAL;
  throw ConfigError("unknown kernel kind '" + text + "'");
}

Normalization parse_normalization(const std::string& text) {
  if (text == "MU_SCALED") return Normalization::MU_SCALED;
  if (text == "PLAIN") return Normalization::PLAIN;
  throw ConfigError("unknown normalization '" + text + "'");
}

TranslateVariant parse_variant(const std::string& text) {
  if (text == "QUADRATIC") return TranslateVariant::QUADRATIC;
  if (text == "LINEAR") return TranslateVariant::LINEAR;
  throw ConfigError("unknown translate variant '" + text + "'");
}

}  // namespace dfw
