#include "quartic/moments.hpp"

#include <cmath>
#include <string>

#include "quartic/errors.hpp"

namespace quartic {

MonomialPowers powers(Moment m) {
  switch (m) {
    case Moment::kA: return {0, 1};
    case Moment::kA2: return {0, 2};
    case Moment::kA4: return {0, 4};
    case Moment::kN: return {1, 1};
    case Moment::kAdA2: return {1, 2};
    case Moment::kAd2A2: return {2, 2};
    case Moment::kAdA3: return {1, 3};
    case Moment::kAd2A4: return {2, 4};
    case Moment::kAd3A3: return {3, 3};
    case Moment::kAd4A4: return {4, 4};
  }
  throw InvalidArgument("unknown moment");
}

std::string_view moment_name(Moment m) {
  switch (m) {
    case Moment::kA: return "<a>";
    case Moment::kA2: return "<a^2>";
    case Moment::kA4: return "<a^4>";
    case Moment::kN: return "<a+a>";
    case Moment::kAdA2: return "<a+a^2>";
    case Moment::kAd2A2: return "<a+^2a^2>";
    case Moment::kAdA3: return "<a+a^3>";
    case Moment::kAd2A4: return "<a+^2a^4>";
    case Moment::kAd3A3: return "<a+^3a^3>";
    case Moment::kAd4A4: return "<a+^4a^4>";
  }
  return "?";
}

Complex MomentSet::get(Moment m) const {
  const auto& v = values_[static_cast<int>(m)];
  if (!v) throw InvalidArgument("moment " + std::string(moment_name(m)) + " not recorded");
  return *v;
}

MomentSet MomentSet::coherent(Complex alpha) {
  MomentSet out;
  for (Moment m : kAllMoments) {
    const auto [c, a] = powers(m);
    out.set(m, std::pow(std::conj(alpha), c) * std::pow(alpha, a));
  }
  return out;
}

MomentSet MomentSet::number_state(int n) {
  if (n < 0) throw InvalidArgument("number_state: n must be nonnegative");
  MomentSet out;
  for (Moment m : kAllMoments) {
    const auto [c, a] = powers(m);
    double value = 0.0;
    if (c == a && a <= n) {
      value = 1.0;
      for (int k = 0; k < a; ++k) value *= static_cast<double>(n - k);
    }
    out.set(m, value);
  }
  return out;
}

MomentSet MomentSet::from_state(const FockVector& state, double phase_time) {
  // lowered[k] = a^k |psi>, each step the matvec with the bidiagonal a.
  const int dim = state.dim();
  std::array<ComplexVector, 5> lowered;
  lowered[0] = state.amplitudes();
  for (int k = 1; k <= 4; ++k) {
    ComplexVector next = ComplexVector::Zero(dim);
    for (int n = 0; n + 1 < dim; ++n) {
      next(n) = std::sqrt(static_cast<double>(n + 1)) * lowered[k - 1](n + 1);
    }
    lowered[k] = std::move(next);
  }
  MomentSet out;
  for (Moment m : kAllMoments) {
    const auto [c, a] = powers(m);
    const Complex raw = lowered[c].dot(lowered[a]);
    out.set(m, c == a ? raw : raw * std::polar(1.0, (a - c) * phase_time));
  }
  return out;
}

std::vector<double> MomentSet::factorial_moments() const {
  std::vector<double> out{1.0};
  for (Moment m : {Moment::kN, Moment::kAd2A2, Moment::kAd3A3, Moment::kAd4A4}) {
    if (!has(m)) break;
    out.push_back(get(m).real());
  }
  return out;
}

}  // namespace quartic
