#pragma once

// Nonclassicality witnesses evaluated from moments. The functions here do
// not care whether a MomentSet came from the exact evolution, from the
// first-order operator solution or from analytic coherent-state values.

#include <string>
#include <string_view>
#include <vector>

#include "quartic/moments.hpp"

namespace quartic {

inline constexpr double kBoundaryTolerance = 1e-10;

enum class Classification { kNonclassical, kClassical, kBoundary };
enum class EvaluationPath { kClosedForm, kExactOracle, kFirstOrderMatrix };

std::string_view to_string(Classification c);
std::string_view to_string(EvaluationPath p);

/// nonclassical iff value < -tolerance, boundary iff |value| <= tolerance.
Classification classify(double value, double tolerance = kBoundaryTolerance);

struct CriterionReport {
  std::string name;
  double value = 0.0;
  Classification classification = Classification::kBoundary;
  double tolerance = kBoundaryTolerance;
  EvaluationPath path = EvaluationPath::kExactOracle;
};

CriterionReport make_report(std::string name, double value, EvaluationPath path,
                            double tolerance = kBoundaryTolerance);

/// (Delta X)^2 - 1/2 with X = (a+ + a)/sqrt(2). Needs <a>, <a^2>, <a+a>.
CriterionReport quadrature_squeezing(const MomentSet& m,
                                     EvaluationPath path = EvaluationPath::kExactOracle,
                                     double tolerance = kBoundaryTolerance);

/// <a+^2 a^2> - <a+a>^2, i.e. (Delta N)^2 - <N>; this is d(1).
CriterionReport antibunching_second_order(const MomentSet& m,
                                          EvaluationPath path = EvaluationPath::kExactOracle,
                                          double tolerance = kBoundaryTolerance);

/// Amplitude-squared squeezing (Delta Y1)^2 - <2N + 1> with
/// Y1 = (a+^2 + a^2)/sqrt(2). Normal ordering a^2 a+^2 = a+^2 a^2 + 4a+a + 2
/// reduces it to Re<a^4> + <a+^2 a^2> - 2 (Re<a^2>)^2.
CriterionReport hillery_squeezing(const MomentSet& m,
                                  EvaluationPath path = EvaluationPath::kExactOracle,
                                  double tolerance = kBoundaryTolerance);

/// Factorial moments <N^(i)>, index i, with element 0 equal to 1.
using FactorialMoments = std::vector<double>;

/// R(l, m) = <N^(l+1)><N^(m-1)> / (<N^(l)><N^(m)>) - 1 for l >= m >= 1.
/// Throws InvalidArgument for a bad (l, m) or too few moments, and
/// ZeroDenominator when <N^(l)><N^(m)> vanishes.
double lee_R(const FactorialMoments& fm, int l, int m);
double lee_R(const MomentSet& moments, int l, int m);

/// A_l = <N^(l+1)> / (<N^(l)><N>) - 1, which is R(l, 1).
double ba_an_A(const FactorialMoments& fm, int l);

/// d(l) = <N^(l+1)> - <N>^(l+1).
CriterionReport hoa_d_from_moments(const FactorialMoments& fm, int l,
                                   EvaluationPath path = EvaluationPath::kExactOracle,
                                   double tolerance = kBoundaryTolerance);

}  // namespace quartic
