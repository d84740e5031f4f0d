#include "dfw/sigmoid.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "dfw/errors.hpp"
#include "dfw/kernels.hpp"
#include "dfw/specfun.hpp"

namespace dfw {
namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError(std::string(what) + " must be > 0");
}

bool fundamental_singular(double n, double r) { return n >= 2.0 && r == 0.0; }

double logistic(double x) { return 1.0 / (1.0 + x); }

// (1 - h)/(1 + h) and (h - 1)/(h + 1) share this helper.
double ratio(double h) { return (h - 1.0) / (h + 1.0); }

}  // namespace

double phi_general(double n, double s, double r) {
  return eval_mod_helmholtz(n, s, r, Kind::GENERAL, Normalization::PLAIN).re;
}

double phi_fundamental(double n, double s, double r) {
  const KernelValue v = eval_mod_helmholtz(n, s, r, Kind::FUNDAMENTAL, Normalization::PLAIN);
  if (v.singular) throw PoleError("fundamental solution is singular at r = 0");
  return v.re;
}

FlaggedValue hyperbolic_g(HyperbolicKind kind, double n, double s, double r) {
  require_positive(n, "dimension n");
  require_positive(s, "slope s");
  if (!(r >= 0.0)) throw DomainError("distance r must be >= 0");

  double sing = 0.0;
  double cosg = 0.0;
  if (n == 1.0) {
    const double x = s * r;
    sing = std::sinh(x) / s;
    cosg = std::cosh(x) / s;
    if (!std::isfinite(cosg)) throw RangeError("hyperbolic function overflow");
    switch (kind) {
      case HyperbolicKind::SING: return {sing};
      case HyperbolicKind::COSG: return {cosg};
      case HyperbolicKind::TANG: return {std::tanh(x)};
      case HyperbolicKind::SECG: return {s / std::cosh(x)};
      case HyperbolicKind::CSCG:
        if (x == 0.0) return {0.0, ValueFlag::DIVISION_BY_ZERO};
        return {s / std::sinh(x)};
      case HyperbolicKind::COTHG:
        if (x == 0.0) return {0.0, ValueFlag::DIVISION_BY_ZERO};
        return {1.0 / std::tanh(x)};
    }
  }
  if (fundamental_singular(n, r)) return {0.0, ValueFlag::SINGULAR};
  const double g = phi_general(n, s, r);
  const double f = phi_fundamental(n, s, r);
  sing = g - f;
  cosg = g + f;
  switch (kind) {
    case HyperbolicKind::SING: return {sing};
    case HyperbolicKind::COSG: return {cosg};
    case HyperbolicKind::TANG:
      if (cosg == 0.0) return {0.0, ValueFlag::DIVISION_BY_ZERO};
      return {sing / cosg};
    case HyperbolicKind::CSCG:
      if (sing == 0.0) return {0.0, ValueFlag::DIVISION_BY_ZERO};
      return {1.0 / sing};
    case HyperbolicKind::SECG:
      if (cosg == 0.0) return {0.0, ValueFlag::DIVISION_BY_ZERO};
      return {1.0 / cosg};
    case HyperbolicKind::COTHG:
      if (sing == 0.0) return {0.0, ValueFlag::DIVISION_BY_ZERO};
      return {cosg / sing};
  }
  return {0.0, ValueFlag::OK};
}

void SigmoidSpec::validate() const {
  require_positive(n, "dimension n");
  require_positive(s, "slope s");
  switch (family) {
    case SigmoidFamily::LAPLACE_CHEAP:
      if (n < 3.0) throw DomainError("LAPLACE_CHEAP sigmoid requires n >= 3");
      break;
    case SigmoidFamily::HELMHOLTZ_FUND:
      if (n < 2.0) throw DomainError("HELMHOLTZ_FUND sigmoid requires n >= 2");
      break;
    case SigmoidFamily::CONVDIFF_FUND:
    case SigmoidFamily::CONVDIFF_GEN:
      require_positive(D, "diffusivity D");
      break;
    case SigmoidFamily::HEAT_TS:
      require_positive(alpha, "alpha");
      break;
    default:
      break;
  }
}

double sigmoid(const SigmoidSpec& spec, double A) {
  spec.validate();
  if (!std::isfinite(A)) throw DomainError("activation must be finite");
  const double z = spec.s * A;
  switch (spec.family) {
    case SigmoidFamily::LOGISTIC:
      return logistic(std::exp(-z));
    case SigmoidFamily::MODHELM_FUND:
      if (!(A >= 0.0)) throw DomainError("MODHELM_FUND needs A >= 0");
      if (fundamental_singular(spec.n, A)) throw PoleError("MODHELM_FUND is singular at A = 0 for n >= 2");
      return logistic(phi_fundamental(spec.n, spec.s, A));
    case SigmoidFamily::MODHELM_GEN:
      if (!(A >= 0.0)) throw DomainError("MODHELM_GEN needs A >= 0");
      return ratio(phi_general(spec.n, spec.s, A));
    case SigmoidFamily::CONVDIFF_FUND:
    case SigmoidFamily::CONVDIFF_GEN:
      return sigmoid_convdiff(spec, spec.projection, A);
    case SigmoidFamily::HEAT_TS: {
      if (!(A >= 0.0)) throw DomainError("HEAT_TS needs A >= 0");
      const double dt = spec.alpha * spec.time_lag;
      if (dt <= 0.0) return 1.0;
      const double u = std::exp(-z * z / (4.0 * dt)) / std::pow(4.0 * std::numbers::pi * dt, 0.5 * spec.n);
      return logistic(u);
    }
    case SigmoidFamily::LAPLACE_CHEAP: {
      if (!(A > 0.0)) throw DomainError("LAPLACE_CHEAP needs A > 0");
      const double u = std::pow(z, 2.0 - spec.n) / ((spec.n - 2.0) * specfun::unit_sphere_area(spec.n));
      return logistic(u);
    }
    case SigmoidFamily::HELMHOLTZ_FUND: {
      if (!(A > 0.0)) throw DomainError("HELMHOLTZ_FUND needs A > 0");
      const KernelValue h = eval_helmholtz_fundamental_normalized(spec.n, 1.0, z);
      return logistic(h.magnitude());
    }
    case SigmoidFamily::HELMHOLTZ_GEN: {
      if (!(A >= 0.0)) throw DomainError("HELMHOLTZ_GEN needs A >= 0");
      const KernelValue h = eval_helmholtz(spec.n, 0, 1.0, z, Kind::GENERAL);
      return -ratio(std::abs(h.re));
    }
  }
  throw ConfigError("unknown sigmoid family");
}

double sigmoid_convdiff(const SigmoidSpec& spec, double projection, double distance) {
  spec.validate();
  if (spec.family != SigmoidFamily::CONVDIFF_FUND && spec.family != SigmoidFamily::CONVDIFF_GEN) {
    throw ConfigError("sigmoid_convdiff needs a CONVDIFF family");
  }
  if (!(distance >= 0.0) || !std::isfinite(projection)) {
    throw DomainError("convection-diffusion sigmoid needs distance >= 0 and a finite projection");
  }
  const double shift = std::exp(-projection / (2.0 * spec.D));
  if (spec.family == SigmoidFamily::CONVDIFF_FUND) {
    if (fundamental_singular(spec.n, distance)) throw PoleError("CONVDIFF_FUND is singular at zero distance");
    const double u = shift * phi_fundamental(spec.n, spec.s, distance);
    if (!std::isfinite(u)) throw RangeError("convection-diffusion sigmoid overflow");
    return logistic(u);
  }
  const double u = shift * phi_general(spec.n, spec.s, distance);
  if (!std::isfinite(u)) throw RangeError("convection-diffusion sigmoid overflow");
  return ratio(u);
}

double sigmoid_at(const SigmoidSpec& spec, const Point& x, const Point& center) {
  const double d = euclidean(x, center);
  if (spec.family == SigmoidFamily::CONVDIFF_FUND || spec.family == SigmoidFamily::CONVDIFF_GEN) {
    const double p = spec.w.empty() ? 0.0 : direction_projection(x, center, spec.w);
    return sigmoid_convdiff(spec, p, d);
  }
  return sigmoid(spec, d);
}

double sigmoid_modhelm_fund_approx(double n, double s, double A) {
  require_positive(n, "dimension n");
  require_positive(s, "slope s");
  if (!(A > 1.0)) throw DomainError("the simplified form is only valid for A > 1");
  const double z = s * A;
  return logistic(std::exp(-z) / (std::pow(z, 0.5 * n - 1.0) * std::log(A)));
}

std::string to_string(SigmoidFamily family) {
  switch (family) {
    case SigmoidFamily::LOGISTIC: return "LOGISTIC";
    case SigmoidFamily::MODHELM_FUND: return "MODHELM_FUND";
    case SigmoidFamily::MODHELM_GEN: return "MODHELM_GEN";
    case SigmoidFamily::CONVDIFF_FUND: return "CONVDIFF_FUND";
    case SigmoidFamily::CONVDIFF_GEN: return "CONVDIFF_GEN";
    case SigmoidFamily::HEAT_TS: return "HEAT_TS";
    case SigmoidFamily::LAPLACE_CHEAP: return "LAPLACE_CHEAP";
    case SigmoidFamily::HELMHOLTZ_FUND: return "HELMHOLTZ_FUND";
    case SigmoidFamily::HELMHOLTZ_GEN: return "HELMHOLTZ_GEN";
  }
  return "UNKNOWN";
}

SigmoidFamily parse_sigmoid_family(const std::string& text) {
  for (auto f : {SigmoidFamily::LOGISTIC, SigmoidFamily::MODHELM_FUND, SigmoidFamily::MODHELM_GEN,
                 SigmoidFamily::CONVDIFF_FUND, SigmoidFamily::CONVDIFF_GEN, SigmoidFamily::HEAT_TS,
                 SigmoidFamily::LAPLACE_CHEAP, SigmoidFamily::HELMHOLTZ_FUND, SigmoidFamily::HELMHOLTZ_GEN}) {
    if (to_string(f) == text) return f;
  }
  throw ConfigError("unknown sigmoid family '" + text + "'");
}

std::string to_string(HyperbolicKind kind) {
  switch (kind) {
    case HyperbolicKind::SING: return "sing";
    case HyperbolicKind::COSG: return "cosg";
    case HyperbolicKind::TANG: return "tang";
    case HyperbolicKind::CSCG: return "cscg";
    case HyperbolicKind::SECG: return "secg";
    case HyperbolicKind::COTHG: return "cothg";
  }
  return "unknown";
}

HyperbolicKind parse_hyperbolic_kind(const std::string& text) {
  for (auto k : {HyperbolicKind::SING, HyperbolicKind::COSG, HyperbolicKind::TANG, HyperbolicKind::CSCG,
                 HyperbolicKind::SECG, HyperbolicKind::COTHG}) {
    if (to_string(k) == text) return k;
  }
  throw ConfigError("unknown hyperbolic kind '" + text + "'");
}

}  // namespace dfw
