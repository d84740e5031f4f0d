#pragma once

#include <string>
#include <vector>

#include "dfw/geometry.hpp"

namespace dfw {

enum class HyperbolicKind { SING, COSG, TANG, CSCG, SECG, COTHG };
enum class ValueFlag { OK, SINGULAR, DIVISION_BY_ZERO };

struct FlaggedValue {
  double value = 0.0;
  ValueFlag flag = ValueFlag::OK;

  bool ok() const { return flag == ValueFlag::OK; }
};

/// Multidimensional hyperbolic functions built from the general (I-type) and
/// fundamental (K-type) modified Helmholtz solutions with mu = s. For n = 1
/// they reduce to sinh(sr)/s, cosh(sr)/s, tanh(sr) and reciprocals.
FlaggedValue hyperbolic_g(HyperbolicKind kind, double n, double s, double r);

/// phi^#_n and phi^*_n: plain modified Helmholtz solutions at distance r
/// with mu = s (n = 1: e^{+-sr}/2s).
double phi_general(double n, double s, double r);
double phi_fundamental(double n, double s, double r);

enum class SigmoidFamily {
  LOGISTIC,
  MODHELM_FUND,
  MODHELM_GEN,
  CONVDIFF_FUND,
  CONVDIFF_GEN,
  HEAT_TS,
  LAPLACE_CHEAP,
  HELMHOLTZ_FUND,
  HELMHOLTZ_GEN
};

struct SigmoidSpec {
  SigmoidFamily family = SigmoidFamily::LOGISTIC;
  double n = 1.0;
  double s = 1.0;              // slope
  std::vector<double> w;       // CONVDIFF direction
  double D = 1.0;              // CONVDIFF diffusivity
  double projection = 0.0;     // CONVDIFF w.(x - x_k) when called with a scalar activation
  double alpha = 1.0;          // HEAT_TS time scaling
  double time_lag = 1.0;       // HEAT_TS t - tau

  void validate() const;
};

/// Transfer function of activation A. CONVDIFF families take A as the
/// distance argument and spec.projection as the direction argument.
double sigmoid(const SigmoidSpec& spec, double A);

/// Convection-diffusion families with explicit (w.(x - x_k), |x - x_k|).
double sigmoid_convdiff(const SigmoidSpec& spec, double projection, double distance);

/// Activation from a point: CONVDIFF uses (w.(x - center), |x - center|);
/// every other family uses A = |x - center|.
double sigmoid_at(const SigmoidSpec& spec, const Point& x, const Point& center);

/// Simplified modified Helmholtz fundamental sigmoid
/// 1/(1 + e^{-sA}/((sA)^{n/2-1} ln A)). Only an approximation, valid for A > 1.
double sigmoid_modhelm_fund_approx(double n, double s, double A);

std::string to_string(SigmoidFamily family);
SigmoidFamily parse_sigmoid_family(const std::string& text);
std::string to_string(HyperbolicKind kind);
HyperbolicKind parse_hyperbolic_kind(const std::string& text);

}  // namespace dfw
