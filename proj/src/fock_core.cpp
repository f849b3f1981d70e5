#include "quartic/fock_core.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "quartic/errors.hpp"

namespace quartic {

FockVector::FockVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw InvalidArgument("FockVector: dimension must be at least 2, got " +
                          std::to_string(amplitudes_.size()));
  }
}

FockVector FockVector::number_state(int n, int dim) {
  if (n < 0 || n >= dim) {
    throw InvalidArgument("number_state: n=" + std::to_string(n) + " outside basis of size " +
                          std::to_string(dim));
  }
  ComplexVector c = ComplexVector::Zero(dim);
  c(n) = 1.0;
  return FockVector(std::move(c));
}

OperatorMatrix::OperatorMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw InvalidArgument("OperatorMatrix: matrix must be square");
  }
  if (entries_.rows() < 2) {
    throw InvalidArgument("OperatorMatrix: dimension must be at least 2");
  }
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(entries_.adjoint()); }

ComplexVector OperatorMatrix::apply(const ComplexVector& v) const {
  if (v.size() != entries_.cols()) {
    throw InvalidArgument("OperatorMatrix::apply: dimension mismatch");
  }
  return entries_ * v;
}

namespace {
void require_same_dim(const OperatorMatrix& x, const OperatorMatrix& y, const char* what) {
  if (x.dim() != y.dim()) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch " + std::to_string(x.dim()) +
                          " vs " + std::to_string(y.dim()));
  }
}
}  // namespace

OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_dim(x, y, "operator*");
  return OperatorMatrix(x.entries_ * y.entries_);
}

OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_dim(x, y, "operator+");
  return OperatorMatrix(x.entries_ + y.entries_);
}

OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_dim(x, y, "operator-");
  return OperatorMatrix(x.entries_ - y.entries_);
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& x) { return OperatorMatrix(s * x.entries_); }

LadderOps make_ladder_ops(int dim) {
  if (dim < 2) {
    throw InvalidArgument("make_ladder_ops: dim must be at least 2, got " + std::to_string(dim));
  }
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k));
    n(k, k) = static_cast<double>(k);
  }
  ComplexMatrix ad = a.adjoint();
  return {OperatorMatrix(std::move(a)), OperatorMatrix(std::move(ad)), OperatorMatrix(std::move(n))};
}

void ModelParams::validate() const {
  if (!std::isfinite(alpha_mag) || alpha_mag < 0.0) {
    throw InvalidArgument("alpha_mag must be finite and nonnegative");
  }
  if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw InvalidArgument("lambda must be finite and nonnegative");
  }
  if (dim < 2) throw InvalidArgument("dim must be at least 2, got " + std::to_string(dim));
}

int ModelParams::auto_dim(double alpha_mag) {
  return static_cast<int>(std::ceil(alpha_mag * alpha_mag + 8.0 * alpha_mag + 20.0));
}

ModelParams ModelParams::with_auto_dim(double alpha_mag, double theta, double lambda) {
  return {alpha_mag, theta, lambda, auto_dim(alpha_mag)};
}

double poisson_tail_mass(double mean, int dim) {
  if (dim <= 0) return 1.0;
  if (mean <= 0.0) return 0.0;
  const double log_mean = std::log(mean);
  double tail = 0.0;
  for (int n = dim;; ++n) {
    const double term = std::exp(-mean + n * log_mean - std::lgamma(n + 1.0));
    tail += term;
    if (n > mean && term <= 1e-18 * tail) break;
    if (n > dim + 100000) break;
  }
  return tail;
}

void require_truncation_safe(double alpha_mag, int dim) {
  const double tail = poisson_tail_mass(alpha_mag * alpha_mag, dim);
  if (tail > kTailTolerance) {
    std::ostringstream msg;
    msg << "dimension " << dim << " too small for |alpha|=" << alpha_mag
        << ": Poisson tail mass " << tail << " exceeds " << kTailTolerance
        << " (auto dimension would be " << ModelParams::auto_dim(alpha_mag) << ")";
    throw PreconditionFailure(msg.str());
  }
}

FockVector coherent_state(Complex alpha, int dim) {
  if (dim < 2) throw InvalidArgument("coherent_state: dim must be at least 2");
  require_truncation_safe(std::abs(alpha), dim);
  ComplexVector c(dim);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n + 1 < dim; ++n) {
    c(n + 1) = c(n) * alpha / std::sqrt(static_cast<double>(n + 1));
  }
  c /= c.norm();
  return FockVector(std::move(c));
}

Complex expectation(const FockVector& state, const OperatorMatrix& op) {
  if (state.dim() != op.dim()) {
    throw InvalidArgument("expectation: state dim " + std::to_string(state.dim()) +
                          " != operator dim " + std::to_string(op.dim()));
  }
  return state.amplitudes().dot(op.entries() * state.amplitudes());
}

double factorial_moment(const FockVector& state, int order) {
  if (order < 1) throw InvalidArgument("factorial_moment: order must be >= 1");
  if (order >= state.dim()) {
    throw PreconditionFailure("factorial_moment: order " + std::to_string(order) +
                              " not representable in dimension " + std::to_string(state.dim()));
  }
  double sum = 0.0;
  for (int n = order; n < state.dim(); ++n) {
    double falling = 1.0;
    for (int k = 0; k < order; ++k) falling *= static_cast<double>(n - k);
    sum += falling * std::norm(state[n]);
  }
  return sum;
}

}  // namespace quartic
