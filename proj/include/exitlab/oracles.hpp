#pragma once

#include <cmath>
#include <numbers>

#include "exitlab/common.hpp"
#include "exitlab/quadrature.hpp"

// Closed forms and rigorous bounds used as ground truth for the samplers.
// Everything here is a pure function of its arguments.

namespace exitlab::oracles {

struct BoundPair {
  double lower;
  double upper;
};

// Transition density of one-dimensional Brownian motion at time s.
inline double gaussian_density(double x, double s) {
  if (!(s > 0.0)) throw NonpositiveVariance("gaussian_density: s <= 0");
  return std::exp(-x * x / (2.0 * s)) / std::sqrt(2.0 * std::numbers::pi * s);
}

// P(tau_a <= t) for the first hitting time of level a > 0 by 1-d Brownian
// motion started at 0; reflection principle gives erfc(a / sqrt(2t)).
inline double halfplane_exit_cdf(double a, double t) {
  if (!(a > 0.0) || !(t > 0.0)) throw InvalidParameter("halfplane_exit_cdf: need a, t > 0");
  return std::erfc(a / std::sqrt(2.0 * t));
}

// Complement of the above: probability of staying below level a up to time t.
inline double halfplane_survival(double a, double t) {
  if (!(a > 0.0) || !(t > 0.0)) throw InvalidParameter("halfplane_survival: need a, t > 0");
  return std::erf(a / std::sqrt(2.0 * t));
}

// Survival probability of planar Brownian motion started at 1+i in the open
// quarter-plane: the two coordinates stay positive independently.
inline double quarterplane_survival(double t) {
  if (!(t > 0.0)) throw InvalidParameter("quarterplane_survival: need t > 0");
  const double e = std::erf(1.0 / std::sqrt(2.0 * t));
  return e * e;
}

// Explicit bounds realizing the classical sandwich for int_y^inf e^{-x^2} dx.
// Valid for every y > 0, not only asymptotically:
//   y e^{-y^2} / (2y^2 + 1)  <=  integral  <=  e^{-y^2} / (2y).
inline BoundPair gaussian_tail_sandwich(double y) {
  if (!(y > 0.0)) throw InvalidParameter("gaussian_tail_sandwich: need y > 0");
  const double e = std::exp(-y * y);
  return {y * e / (2.0 * y * y + 1.0), e / (2.0 * y)};
}

// Rate factor exp(-cos^2(pi/n) / (2t)) of the disk fast-exit upper bound.
// The multiplicative constant c(n) is unknown, so this is only meaningful in
// log-scale slope comparisons.
inline double mcconnell_disk_rate(double t, int n) {
  if (!(t > 0.0) || n < 3) throw InvalidParameter("mcconnell_disk_rate: need t > 0, n >= 3");
  const double c = std::cos(std::numbers::pi / n);
  return std::exp(-c * c / (2.0 * t));
}

// P(X_{t/2} > 0, X_t < 0) evaluated by quadrature of the double integral
//   int_0^inf p_{t/2}(y) int_y^inf p_{t/2}(x) dx dy.
// The inner integral is (1/2) erfc(y / sqrt(t)); the exact value is 1/8 for
// every t by exchangeability of the two independent increments.
inline double prob_pos_then_neg(double t) {
  if (!(t > 0.0)) throw InvalidParameter("prob_pos_then_neg: need t > 0");
  const double s = 0.5 * t;
  const double hi = 12.0 * std::sqrt(t);  // integrand ~ e^{-y^2/t}; tail < 1e-30 relative
  auto f = [s, t](double y) {
    return gaussian_density(y, s) * 0.5 * std::erfc(y / std::sqrt(t));
  };
  return integrate(f, 0.0, hi, 1e-10);
}

// P(X_s = 0 for some s in [t/2, t]). The arcsine law for the zero set gives
// 1 - (2/pi) arcsin(sqrt((t/2)/t)) = 1/2 for every t; the ratio of window
// endpoints is fixed, so the value is returned in closed form.
inline double prob_zero_hit_second_half(double t) {
  if (!(t > 0.0)) throw InvalidParameter("prob_zero_hit_second_half: need t > 0");
  return 0.5;
}

// Arcsine law for a general window: P(no zero of X in [u, t]), 0 < u <= t.
inline double prob_no_zero_in_window(double u, double t) {
  if (!(u > 0.0) || !(t >= u)) throw InvalidParameter("prob_no_zero_in_window: need 0 < u <= t");
  return 2.0 / std::numbers::pi * std::asin(std::sqrt(u / t));
}

// P(X_s <= -alpha for all s in [t/2, t]): condition on X_{t/2} = y < -alpha,
// then the path must avoid level -alpha over a window of length t/2, which
// has probability erf((-alpha - y) / sqrt(t)). Quadrature at 1e-8 relative.
inline double prob_stay_below(double alpha, double t) {
  if (!(alpha > 0.0) || !(t > 0.0)) throw InvalidParameter("prob_stay_below: need alpha, t > 0");
  const double s = 0.5 * t;
  // substitute w = -alpha - y >= 0
  auto f = [alpha, s, t](double w) {
    return gaussian_density(w + alpha, s) * std::erf(w / std::sqrt(t));
  };
  const double hi = std::sqrt(alpha * alpha + 45.0 * t) - alpha;
  return integrate(f, 0.0, hi, 1e-8);
}

// Rigorous lower bound on P(T^{K_alpha} <= t) for the slit plane
// K_alpha = C \ (-inf, -alpha]: the horizontal coordinate stays below -alpha
// over [t/2, t] while the vertical coordinate hits zero there, and the two
// events are independent. eps is the bound-tuning parameter; the range it
// must satisfy for the small-t comparison to be conclusive is validated here.
inline double slit_fast_exit_lower_bound(double alpha, double eps, double t) {
  if (!(alpha > 0.0) || !(alpha < 1.0 / std::numbers::sqrt2))
    throw InvalidParameter("slit_fast_exit_lower_bound: need 0 < alpha < 1/sqrt(2)");
  if (!(eps > 0.0) || !(t > 0.0))
    throw InvalidParameter("slit_fast_exit_lower_bound: need eps, t > 0");
  const double ae = alpha + eps;
  if (!(eps * eps + ae * ae < 0.5 - eps))
    throw InvalidParameter("slit_fast_exit_lower_bound: eps^2 + (alpha+eps)^2 < 1/2 - eps fails");
  return prob_stay_below(alpha, t) * prob_zero_hit_second_half(t);
}

}  // namespace exitlab::oracles
