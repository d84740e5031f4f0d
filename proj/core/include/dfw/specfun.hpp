#pragma once

#include <complex>

namespace dfw::specfun {

/// Value of a special function together with an estimate of its absolute
/// error. `imag` is non-zero only for complex-valued results (Hankel).
struct SpecFunResult {
  double value = 0.0;
  double imag = 0.0;
  double est_abs_error = 0.0;

  std::complex<double> complex() const { return {value, imag}; }
};

enum class BesselKind { J, Y, I, K, H1 };

/// Largest supported |order| and argument for bessel().
inline constexpr double kMaxBesselOrder = 60.0;
inline constexpr double kMaxBesselArgument = 1.0e4;

/// Gamma function. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// Bessel functions of real order.
///
/// Negative orders are reduced with the reflection identities. Y, K and H1
/// require x > 0; J and I accept x = 0. Results that overflow double (I for
/// very large x, Y/K for tiny x and large order) raise RangeError.
///
/// Evaluation regions, selected per (order, x):
///   - ascending power series for J and I when x <= 2;
///   - Temme series for Y and K when x < 2;
///   - Steed continued fractions for 2 <= x <= seam;
///   - large-argument (Hankel) asymptotics for x > seam,
/// where seam = asymptotic_seam(order).
SpecFunResult bessel(BesselKind kind, double order, double x);

/// x beyond which bessel() switches to the large-argument expansion.
double asymptotic_seam(double order);

/// Forced-method evaluators, exposed so the seam between the two large-x
/// algorithms can be tested directly. Both require x >= 2.
SpecFunResult bessel_continued_fraction(BesselKind kind, double order, double x);
SpecFunResult bessel_asymptotic(BesselKind kind, double order, double x);

/// Surface area of the unit sphere in R^n, 2 pi^{n/2} / Gamma(n/2), n real > 0.
double unit_sphere_area(double n);

/// Complete elliptic integral of the first kind in the parameter convention,
/// K(s) = int_0^{pi/2} dtheta / sqrt(1 - s sin^2 theta), 0 <= s < 1.
double elliptic_complete_first(double s);

/// sin(pi x) and cos(pi x), exact at integers and half integers.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace dfw::specfun
