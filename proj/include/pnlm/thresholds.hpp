#pragma once

#include <cmath>

#include "pnlm/params.hpp"

namespace pnlm {

/// Patch-similarity weight exp(-d / h^2) for a squared patch distance d.
inline double weight(double d, double h) { return std::exp(-d / (h * h)); }

/// Hard threshold: 1 for t >= lambda (boundary included), else 0.
inline double step_threshold(double t, double lambda) { return t >= lambda ? 1.0 : 0.0; }

/// Logistic relaxation of the step, 1 / (1 + e^{-alpha (t - lambda)}).
/// Evaluated with the exponent of a non-positive argument on both branches so
/// it stays finite for any alpha.
inline double sigmoid_threshold(double t, double lambda, double alpha) {
  const double m = alpha * (t - lambda);
  if (m >= 0) {
    const double z = std::exp(-m);
    return 1.0 / (1.0 + z);
  }
  const double z = std::exp(m);
  return z / (1.0 + z);
}

/// psi(t) = t * sigmoid_threshold(t): the effective weight-shaping function.
inline double psi(double t, double lambda, double alpha) {
  return t * sigmoid_threshold(t, lambda, alpha);
}

inline double psi(double t, const PruneConfig& cfg) { return psi(t, cfg.lambda, cfg.alpha); }

/// Closed-form derivative of psi:
///   psi'(t) = (1 + (1 + alpha t) e^{-alpha (t - lambda)}) / (1 + e^{-alpha (t - lambda)})^2
/// For t < lambda both numerator and denominator are rescaled by
/// e^{2 alpha (t - lambda)} so only decaying exponentials appear.
inline double psi_prime(double t, double lambda, double alpha) {
  const double m = alpha * (t - lambda);
  if (m >= 0) {
    const double z = std::exp(-m);
    const double omz = 1.0 + z;
    return (1.0 + (1.0 + alpha * t) * z) / (omz * omz);
  }
  const double q = std::exp(m);
  const double opq = 1.0 + q;
  return (q * q + (1.0 + alpha * t) * q) / (opq * opq);
}

inline double psi_prime(double t, const PruneConfig& cfg) {
  return psi_prime(t, cfg.lambda, cfg.alpha);
}

}  // namespace pnlm
