#pragma once

// Truncated Fock-space primitives: states, ladder operators, expectation
// values and factorial moments over the number basis |0>..|D-1>.

#include <complex>

#include <Eigen/Dense>

namespace quartic {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest Poisson mass allowed beyond the truncation edge.
inline constexpr double kTailTolerance = 1e-12;
/// Bound on ||(a - alpha)|alpha>|| for a constructed coherent state.
inline constexpr double kEigenResidualTolerance = 1e-8;

/// Complex amplitudes c_0..c_{D-1} over the truncated number basis.
class FockVector {
 public:
  explicit FockVector(ComplexVector amplitudes);

  static FockVector number_state(int n, int dim);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](int n) const { return amplitudes_(n); }
  double norm() const { return amplitudes_.norm(); }

 private:
  ComplexVector amplitudes_;
};

/// Dense D x D operator over the truncated basis.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(ComplexMatrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  OperatorMatrix adjoint() const;
  ComplexVector apply(const ComplexVector& v) const;

  friend OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y);
  friend OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y);
  friend OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y);
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& x);

 private:
  ComplexMatrix entries_;
};

struct LadderOps {
  OperatorMatrix a;
  OperatorMatrix a_dagger;
  OperatorMatrix number;
};

/// a[n-1][n] = sqrt(n), a_dagger = a^H, number = diag(0..D-1). Throws
/// InvalidArgument for dim < 2.
LadderOps make_ladder_ops(int dim);

/// Physical parameters of the quartic oscillator plus the truncation.
struct ModelParams {
  double alpha_mag = 0.0;  // |alpha|
  double theta = 0.0;      // phase of alpha, radians
  double lambda = 0.0;     // quartic coupling
  int dim = 0;             // truncation D

  Complex alpha() const { return std::polar(alpha_mag, theta); }

  /// Rejects negative amplitude or coupling, non-finite values and dim < 2.
  void validate() const;

  /// Default truncation ceil(|alpha|^2 + 8|alpha| + 20).
  static int auto_dim(double alpha_mag);
  static ModelParams with_auto_dim(double alpha_mag, double theta, double lambda);
};

/// Poisson mass sum_{n >= dim} e^{-mean} mean^n / n!.
double poisson_tail_mass(double mean, int dim);

/// Throws PreconditionFailure when a coherent state of amplitude |alpha|
/// leaks more than kTailTolerance past the truncation edge.
void require_truncation_safe(double alpha_mag, int dim);

FockVector coherent_state(Complex alpha, int dim);

Complex expectation(const FockVector& state, const OperatorMatrix& op);

/// <N(N-1)...(N-l+1)>. Throws InvalidArgument for order < 1 and
/// PreconditionFailure for order >= dim.
double factorial_moment(const FockVector& state, int order);

}  // namespace quartic
