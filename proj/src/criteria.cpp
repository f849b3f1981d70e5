#include "quartic/criteria.hpp"

#include <cmath>

#include "quartic/errors.hpp"

namespace quartic {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kNonclassical: return "nonclassical";
    case Classification::kClassical: return "classical";
    case Classification::kBoundary: return "boundary";
  }
  return "?";
}

std::string_view to_string(EvaluationPath p) {
  switch (p) {
    case EvaluationPath::kClosedForm: return "closed_form";
    case EvaluationPath::kExactOracle: return "exact_oracle";
    case EvaluationPath::kFirstOrderMatrix: return "first_order_matrix";
  }
  return "?";
}

Classification classify(double value, double tolerance) {
  if (std::abs(value) <= tolerance) return Classification::kBoundary;
  return value < -tolerance ? Classification::kNonclassical : Classification::kClassical;
}

CriterionReport make_report(std::string name, double value, EvaluationPath path, double tolerance) {
  return {std::move(name), value, classify(value, tolerance), tolerance, path};
}

CriterionReport quadrature_squeezing(const MomentSet& m, EvaluationPath path, double tolerance) {
  const double mean_a = m.get(Moment::kA).real();
  const double value = m.get(Moment::kA2).real() + m.get(Moment::kN).real() - 2.0 * mean_a * mean_a;
  return make_report("quadrature", value, path, tolerance);
}

CriterionReport antibunching_second_order(const MomentSet& m, EvaluationPath path,
                                          double tolerance) {
  const double n = m.get(Moment::kN).real();
  return make_report("antibunching", m.get(Moment::kAd2A2).real() - n * n, path, tolerance);
}

CriterionReport hillery_squeezing(const MomentSet& m, EvaluationPath path, double tolerance) {
  const double re_a2 = m.get(Moment::kA2).real();
  // <a+a> enters (Delta Y1)^2 and <2N+1> identically and cancels.
  (void)m.get(Moment::kN);
  const double value = m.get(Moment::kA4).real() + m.get(Moment::kAd2A2).real() - 2.0 * re_a2 * re_a2;
  return make_report("hillery", value, path, tolerance);
}

namespace {
void require_available(const FactorialMoments& fm, int highest, const char* who) {
  if (fm.empty() || fm[0] != 1.0) {
    throw InvalidArgument(std::string(who) + ": factorial moment list must start with <N^(0)> = 1");
  }
  if (static_cast<int>(fm.size()) <= highest) {
    throw InvalidArgument(std::string(who) + ": needs factorial moments up to order " +
                          std::to_string(highest) + ", have " + std::to_string(fm.size() - 1));
  }
}
}  // namespace

double lee_R(const FactorialMoments& fm, int l, int m) {
  if (m < 1 || l < m) {
    throw InvalidArgument("lee_R: requires l >= m >= 1, got l=" + std::to_string(l) +
                          " m=" + std::to_string(m));
  }
  require_available(fm, l + 1, "lee_R");
  const double denominator = fm[l] * fm[m];
  if (denominator == 0.0) {
    throw ZeroDenominator("lee_R: <N^(l)><N^(m)> vanishes for l=" + std::to_string(l) +
                          " m=" + std::to_string(m));
  }
  return fm[l + 1] * fm[m - 1] / denominator - 1.0;
}

double lee_R(const MomentSet& moments, int l, int m) {
  return lee_R(moments.factorial_moments(), l, m);
}

double ba_an_A(const FactorialMoments& fm, int l) { return lee_R(fm, l, 1); }

CriterionReport hoa_d_from_moments(const FactorialMoments& fm, int l, EvaluationPath path,
                                   double tolerance) {
  if (l < 1) throw InvalidArgument("hoa_d_from_moments: order must be >= 1");
  require_available(fm, l + 1, "hoa_d_from_moments");
  const double value = fm[l + 1] - std::pow(fm[1], l + 1);
  return make_report("d" + std::to_string(l), value, path, tolerance);
}

}  // namespace quartic
