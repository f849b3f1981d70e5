#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;

/// sum_n n(n-1)...(n-l+1) |c_n|^2 by explicit loops.
inline double factorial_moment(const Eigen::VectorXcd& c, int l) {
  double s = 0.0;
  for (int n = 0; n < c.size(); ++n) {
    double w = 1.0;
    for (int k = 0; k < l; ++k) w *= (n - k);
    s += w * std::norm(c(n));
  }
  return s;
}

/// <psi| (a+ + a)/sqrt(2) |psi> summed over basis pairs (n, n+1).
inline Complex position_expectation(const Eigen::VectorXcd& c) {
  Complex s = 0.0;
  for (int n = 0; n + 1 < c.size(); ++n) {
    const double amp = std::sqrt(n + 1.0);
    s += std::conj(c(n)) * amp * c(n + 1) + std::conj(c(n + 1)) * amp * c(n);
  }
  return s / std::sqrt(2.0);
}

/// <n|(a+ + a)^4|n> in the untruncated space: 6n^2 + 6n + 3.
inline double quartic_diagonal(int n) { return 6.0 * n * n + 6.0 * n + 3.0; }

/// exp(-i H t) psi by repeated truncated Taylor steps, each step short
/// enough that ||H|| dt <= 1/4. Independent of any eigendecomposition.
inline Eigen::VectorXcd taylor_propagate(const Eigen::MatrixXcd& h, Eigen::VectorXcd psi, double t) {
  const double norm = h.cwiseAbs().rowwise().sum().maxCoeff();
  const int steps = std::max(1, static_cast<int>(std::ceil(4.0 * norm * std::abs(t))));
  const double dt = t / steps;
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd term = psi;
    Eigen::VectorXcd acc = psi;
    for (int k = 1; k < 60; ++k) {
      term = (h * term) * Complex(0.0, -dt / k);
      acc += term;
      if (term.norm() < 1e-18 * acc.norm()) break;
    }
    psi = acc;
  }
  return psi;
}

/// Coherent amplitudes from the closed form e^{-|a|^2/2} a^n / sqrt(n!),
/// with n! accumulated in log space.
inline Eigen::VectorXcd coherent_amplitudes(Complex alpha, int dim) {
  Eigen::VectorXcd c(dim);
  const double r = std::abs(alpha);
  const double phase = std::arg(alpha);
  for (int n = 0; n < dim; ++n) {
    if (r == 0.0) {
      c(n) = n == 0 ? 1.0 : 0.0;
      continue;
    }
    const double log_mag = -0.5 * r * r + n * std::log(r) - 0.5 * std::lgamma(n + 1.0);
    c(n) = std::polar(std::exp(log_mag), n * phase);
  }
  return c;
}

}  // namespace oracle
