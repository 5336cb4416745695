#pragma once

// Scalar special functions and the Gauss-Chebyshev quadrature used by the
// closed-form performance expressions.

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "passnoma/errors.hpp"

namespace passnoma {

// Default number of Gauss-Chebyshev nodes used by rate quadratures when the caller
// does not override it.
inline constexpr int kDefaultQuadratureOrder = 100;

namespace detail {

// Power series for Ei(x) on [-6, 0): Ei(x) = gamma + ln|x| + sum_k x^k/(k*k!).
// Accumulated in long double: at x = -6 the alternating sum loses ~4.6 digits to
// cancellation, which an 64-bit mantissa absorbs while still meeting 1e-12 relative.
inline long double ei_series_negative(long double x) {
  constexpr long double kEulerGamma = 0.577215664901532860606512090082402431043L;
  long double power_over_fact = 1.0L;  // x^k / k!
  long double sum = 0.0L;
  for (int k = 1; k <= 400; ++k) {
    power_over_fact *= x / k;
    const long double add = power_over_fact / k;
    sum += add;
    if (std::fabs(add) < 1e-24L * (std::fabs(sum) + 1.0L)) {
      break;
    }
  }
  return kEulerGamma + std::log(-x) + sum;
}

// Modified Lentz evaluation of the continued fraction for the scaled exponential
// integral e^z * E1(z), valid and fast for z > ~4.
inline double e1_scaled_continued_fraction(double z) {
  constexpr double kTiny = 1e-290;
  constexpr double kEps = 1e-16;
  double b = z + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = a * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + a / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) {
      return h;
    }
  }
  throw numeric_error("continued fraction for scaled E1 failed to converge", z);
}

inline constexpr double kEiSeriesSeam = 6.0;

}  // namespace detail

// Scaled exponential integral e^z * E1(z) for z > 0. The scaling keeps the value
// in normal double range for all z (E1 itself underflows past z ~ 745), which is
// what the blockage closed forms need when they multiply by large exp() factors.
inline double e1_scaled(double z) {
  if (!(z > 0.0)) {
    throw domain_error("e1_scaled requires z > 0");
  }
  if (z <= detail::kEiSeriesSeam) {
    // E1(z) = -Ei(-z); scale by e^z in long double to preserve relative accuracy.
    const long double e1 = -detail::ei_series_negative(-static_cast<long double>(z));
    return static_cast<double>(std::exp(static_cast<long double>(z)) * e1);
  }
  return detail::e1_scaled_continued_fraction(z);
}

// Exponential integral Ei(x) for x < 0. Relative accuracy is 1e-12 or better on
// [-700, -1e-12]; for x < ~-745 the result underflows smoothly to (-)0, which is
// the correct limit and not an error. x >= 0 is outside this library's domain.
inline double exp_integral_ei(double x) {
  if (!(x < 0.0)) {
    throw domain_error("exp_integral_ei requires x < 0");
  }
  if (x >= -detail::kEiSeriesSeam) {
    return static_cast<double>(detail::ei_series_negative(static_cast<long double>(x)));
  }
  // Ei(x) = -E1(-x) = -e^x * (e^{-x'} scaled form), evaluated without forming E1
  // directly so the exp() underflow happens only at the final multiply.
  const double scaled = detail::e1_scaled_continued_fraction(-x);
  return -std::exp(x) * scaled;
}

// Nodes of the order-M Chebyshev rule: t_k = cos((2k-1)pi/(2M)), k = 1..M, with the
// common weight factor pi/M. gc_integrate supplies the sqrt(1-t^2) compensation, so
// the pair approximates a plain integral, not a weighted one.
struct QuadratureRule {
  std::vector<double> nodes;
  double weight_factor = 0.0;

  int order() const { return static_cast<int>(nodes.size()); }
};

inline QuadratureRule chebyshev_nodes(int order) {
  if (order < 1) {
    throw argument_error("chebyshev_nodes requires order >= 1");
  }
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) {
    rule.nodes.push_back(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * order)));
  }
  rule.weight_factor = std::numbers::pi / order;
  return rule;
}

// Gauss-Chebyshev approximation of the plain integral of f over [a, b]:
//   (b-a)/2 * (pi/M) * sum_k sqrt(1-t_k^2) f(a + (b-a)(t_k+1)/2).
// Throws argument_error for a degenerate interval or empty rule and numeric_error
// (carrying the abscissa) if the integrand returns a non-finite value.
template <typename F>
double gc_integrate(F&& f, double a, double b, const QuadratureRule& rule) {
  if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b)) {
    throw argument_error("gc_integrate requires finite bounds with a < b");
  }
  if (rule.nodes.empty()) {
    throw argument_error("gc_integrate requires a rule with at least one node");
  }
  const double half_width = 0.5 * (b - a);
  double sum = 0.0;
  for (const double t : rule.nodes) {
    const double x = a + half_width * (t + 1.0);
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw numeric_error("integrand returned a non-finite value", x);
    }
    sum += std::sqrt(1.0 - t * t) * fx;
  }
  return half_width * rule.weight_factor * sum;
}

}  // namespace passnoma
