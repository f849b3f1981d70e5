#include "quartic/dynamics.hpp"

#include <cmath>
#include <string>

#include "quartic/errors.hpp"

namespace quartic {

OperatorMatrix build_hamiltonian(const ModelParams& params) {
  params.validate();
  const int dim = params.dim;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    x(n - 1, n) = std::sqrt(static_cast<double>(n));
    x(n, n - 1) = x(n - 1, n);
  }
  const Eigen::MatrixXd x2 = x * x;
  Eigen::MatrixXd h = (params.lambda / 16.0) * (x2 * x2);
  // GEMM blocking does not promise bitwise symmetry; mirror explicitly.
  h = (0.5 * (h + h.transpose())).eval();
  for (int n = 0; n < dim; ++n) h(n, n) += n + 0.5;
  return OperatorMatrix(h.cast<Complex>());
}

ExactEvolver::ExactEvolver(ModelParams params, double time_horizon)
    : params_(params),
      time_horizon_(time_horizon),
      hamiltonian_(build_hamiltonian(params)),
      initial_(coherent_state(params.alpha(), params.dim)) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian_.entries().real());
  if (solver.info() != Eigen::Success) {
    throw PreconditionFailure("ExactEvolver: eigendecomposition of H failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  initial_in_eigenbasis_ = eigenvectors_.transpose().cast<Complex>() * initial_.amplitudes();
}

EvolvedState ExactEvolver::evolve(double t) const {
  if (!std::isfinite(t) || std::abs(t) > time_horizon_) {
    throw InvalidArgument("evolve: |t| must be finite and at most " + std::to_string(time_horizon_));
  }
  if (t == 0.0) return {initial_, t, params_};
  ComplexVector rotated(initial_in_eigenbasis_.size());
  for (Eigen::Index k = 0; k < rotated.size(); ++k) {
    rotated(k) = initial_in_eigenbasis_(k) * std::polar(1.0, -eigenvalues_(k) * t);
  }
  ComplexVector psi = eigenvectors_.cast<Complex>() * rotated;
  return {FockVector(std::move(psi)), t, params_};
}

double ExactEvolver::energy(const FockVector& state) const {
  return expectation(state, hamiltonian_).real();
}

EvolvedState evolve_exact(const ModelParams& params, double t) {
  return ExactEvolver(params).evolve(t);
}

MomentSet interaction_moments(const EvolvedState& state) {
  return MomentSet::from_state(state.psi_t, state.t);
}

}  // namespace quartic
