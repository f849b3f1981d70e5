#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "quartic/fock_core.hpp"

namespace quartic {

/// Normally ordered monomials a^dagger^m a^n tracked by MomentSet.
enum class Moment : int {
  kA = 0,   // <a>
  kA2,      // <a^2>
  kA4,      // <a^4>
  kN,       // <a+ a>
  kAdA2,    // <a+ a^2>
  kAd2A2,   // <a+^2 a^2>
  kAdA3,    // <a+ a^3>
  kAd2A4,   // <a+^2 a^4>
  kAd3A3,   // <a+^3 a^3>
  kAd4A4,   // <a+^4 a^4>
};

inline constexpr int kMomentCount = 10;

struct MonomialPowers {
  int creation;
  int annihilation;
};

MonomialPowers powers(Moment m);
std::string_view moment_name(Moment m);
inline constexpr std::array<Moment, kMomentCount> kAllMoments = {
    Moment::kA,     Moment::kA2,    Moment::kA4,    Moment::kN,      Moment::kAdA2,
    Moment::kAd2A2, Moment::kAdA3,  Moment::kAd2A4, Moment::kAd3A3,  Moment::kAd4A4};

/// Expectation values of normally ordered monomials at one instant, in the
/// interaction picture. Any subset may be recorded; reading an absent entry
/// throws InvalidArgument.
class MomentSet {
 public:
  MomentSet() = default;

  /// <alpha| a+^m a^n |alpha> = conj(alpha)^m alpha^n, evaluated analytically.
  static MomentSet coherent(Complex alpha);
  /// Exact moments of the number state |n>.
  static MomentSet number_state(int n);
  /// Moments of an explicit state, each multiplied by exp(i (n - m) phase_time).
  static MomentSet from_state(const FockVector& state, double phase_time);

  void set(Moment m, Complex value) { values_[static_cast<int>(m)] = value; }
  bool has(Moment m) const { return values_[static_cast<int>(m)].has_value(); }
  Complex get(Moment m) const;

  /// <N^(i)> for i = 0..4 where available; element 0 is 1. Stops at the
  /// first missing diagonal moment.
  std::vector<double> factorial_moments() const;

 private:
  std::array<std::optional<Complex>, kMomentCount> values_{};
};

}  // namespace quartic
