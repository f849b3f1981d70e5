#pragma once

// Exact evolution of the quartic oscillator H = (a+a + 1/2) + (lambda/16)(a+ + a)^4
// in the truncated basis. The real-symmetric H is diagonalized once per
// parameter set; every time point afterwards costs two matrix-vector products.

#include <Eigen/Dense>

#include "quartic/fock_core.hpp"
#include "quartic/moments.hpp"

namespace quartic {

inline constexpr double kDefaultTimeHorizon = 1.0e4;

OperatorMatrix build_hamiltonian(const ModelParams& params);

struct EvolvedState {
  FockVector psi_t;  // Schroedinger-picture state
  double t;
  ModelParams params;
};

class ExactEvolver {
 public:
  explicit ExactEvolver(ModelParams params, double time_horizon = kDefaultTimeHorizon);

  const ModelParams& params() const { return params_; }
  const FockVector& initial_state() const { return initial_; }
  const OperatorMatrix& hamiltonian() const { return hamiltonian_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  EvolvedState evolve(double t) const;

  /// <psi|H|psi>, real part.
  double energy(const FockVector& state) const;

 private:
  ModelParams params_;
  double time_horizon_;
  OperatorMatrix hamiltonian_;
  FockVector initial_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  ComplexVector initial_in_eigenbasis_;
};

/// Convenience wrapper; prefer ExactEvolver when sweeping many t.
EvolvedState evolve_exact(const ModelParams& params, double t);

/// Interaction-picture moments e^{i(n-m)t} <psi_t| a+^m a^n |psi_t>.
MomentSet interaction_moments(const EvolvedState& state);

}  // namespace quartic
