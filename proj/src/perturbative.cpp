#include "quartic/perturbative.hpp"

#include <array>
#include <cmath>
#include <string>

#include "quartic/errors.hpp"

namespace quartic {

namespace {

void require_order(int order) {
  if (order < 1 || order > 3) {
    throw InvalidArgument("hoa_witness_d: order " + std::to_string(order) +
                          " unsupported; a first-order operator solution only resolves "
                          "antibunching up to third order");
  }
}

void require_special_order(int order) {
  if (order != 2 && order != 3) {
    throw InvalidArgument("hoa_witness_d_special: only orders 2 and 3 have a theta=pi/2 form");
  }
}

double sq(double x) { return x * x; }

}  // namespace

OperatorMatrix first_order_annihilation(const ModelParams& params, double t) {
  params.validate();
  const auto [a, ad, n] = make_ladder_ops(params.dim);
  const Complex e1 = std::polar(1.0, t);
  const Complex e2 = std::polar(1.0, 2.0 * t);
  const Complex em1 = std::polar(1.0, -t);
  const double s1 = std::sin(t);
  const double s2 = std::sin(2.0 * t);

  const OperatorMatrix a2 = a * a;
  const OperatorMatrix ad2 = ad * ad;
  const OperatorMatrix bracket = Complex(6.0 * t) * a + Complex(6.0 * t) * (ad * a2) +
                                 (6.0 * s1 * e1) * (ad2 * a) + (s2 * e2) * (ad2 * ad) +
                                 (6.0 * s1 * e1) * ad + (2.0 * s1 * em1) * (a2 * a);
  return a - Complex(0.0, params.lambda / 8.0) * bracket;
}

MomentSet first_order_moments(const ModelParams& params, double t) {
  const OperatorMatrix a_t = first_order_annihilation(params, t);
  const FockVector psi0 = coherent_state(params.alpha(), params.dim);
  std::array<ComplexVector, 5> lowered;
  lowered[0] = psi0.amplitudes();
  for (int k = 1; k <= 4; ++k) lowered[k] = a_t.apply(lowered[k - 1]);
  MomentSet out;
  for (Moment m : kAllMoments) {
    const auto [c, ann] = powers(m);
    out.set(m, lowered[c].dot(lowered[ann]));
  }
  return out;
}

namespace published {

namespace terms {

double photon_a(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  return 2.0 * r2 * (2.0 * r2 + 3.0) * std::sin(in.t) * std::sin(2.0 * in.theta - in.t);
}

double photon_b(const ClosedFormInputs& in) {
  const double r4 = sq(sq(in.alpha_mag));
  return r4 * std::sin(2.0 * in.t) * std::sin(2.0 * (2.0 * in.theta - 2.0 * in.t));
}

double variance_1(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  return 4.0 * r2 * (2.0 * r2 + 3.0) * std::sin(in.t) * std::sin(2.0 * in.theta - in.t);
}

double variance_2(const ClosedFormInputs& in) {
  return 12.0 * sq(sq(in.alpha_mag)) * in.t * std::sin(4.0 * in.theta);
}

double variance_3(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  return 3.0 * (2.0 * r2 * r2 + 4.0 * r2 + 1.0) * sq(std::sin(2.0 * in.t));
}

double variance_4(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  return 12.0 * r2 * (2.0 * r2 + 3.0) * std::sin(in.t) * std::sin(2.0 * in.theta + in.t);
}

double variance_5(const ClosedFormInputs& in) {
  const double r4 = sq(sq(in.alpha_mag));
  return 2.0 * r4 * std::sin(2.0 * in.t) * std::sin(2.0 * (2.0 * in.theta - 2.0 * in.t));
}

double squeeze_1(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  return 4.0 * r2 * (2.0 * r2 + 3.0) * std::sin(in.t) * std::sin(in.t + 2.0 * in.theta);
}

double squeeze_2(const ClosedFormInputs& in) {
  return 4.0 * sq(sq(in.alpha_mag)) * in.t * std::sin(4.0 * in.theta);
}

double squeeze_3(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  return (2.0 * r2 * r2 + 4.0 * r2 + 1.0) * sq(std::sin(2.0 * in.t));
}

}  // namespace terms

double mean_photon_number(const ClosedFormInputs& in) {
  return sq(in.alpha_mag) - (in.lambda / 4.0) * (terms::photon_a(in) - terms::photon_b(in));
}

double delta_y1_squared(const ClosedFormInputs& in) {
  using namespace terms;
  const double bracket =
      variance_1(in) - variance_2(in) + variance_3(in) - variance_4(in) - variance_5(in);
  return 2.0 * sq(in.alpha_mag) + 1.0 - (in.lambda / 4.0) * bracket;
}

double squeezing_witness_f(const ClosedFormInputs& in) {
  using namespace terms;
  return -(3.0 * in.lambda / 4.0) * (-squeeze_1(in) - squeeze_2(in) + squeeze_3(in));
}

double squeezing_witness_f_special(double alpha_mag, double lambda, double t) {
  const double r2 = sq(alpha_mag);
  return -(3.0 * lambda / 4.0) * (4.0 * r2 * (2.0 * r2 + 3.0) * sq(std::sin(t)) +
                                  (2.0 * r2 * r2 + 4.0 * r2 + 1.0) * sq(std::sin(2.0 * t)));
}

double hoa_witness_d(int order, const ClosedFormInputs& in) {
  require_order(order);
  const double r2 = sq(in.alpha_mag);
  const double lam = in.lambda;
  const double first = std::sin(in.t - 2.0 * in.theta) * std::sin(in.t);
  const double second = std::sin(2.0 * (in.t - 2.0 * in.theta)) * std::sin(2.0 * in.t);
  switch (order) {
    case 1: return (3.0 * lam * r2 / 4.0) * (2.0 * (2.0 * r2 + 1.0) * first + r2 * second);
    case 2: return (3.0 * lam * r2 * r2 / 2.0) * (first + second);
    default: return (3.0 * lam * r2 * r2 / 4.0) * second;
  }
}

double hoa_witness_d_special(int order, double alpha_mag, double lambda, double t) {
  require_special_order(order);
  const double r4 = sq(sq(alpha_mag));
  if (order == 2) {
    return (3.0 * lambda * r4 / 2.0) * (-sq(std::sin(t)) + sq(std::sin(2.0 * t)));
  }
  return (3.0 * lambda * r4 / 4.0) * sq(std::sin(2.0 * t));
}

}  // namespace published

namespace derived {

namespace {
// sin t sin(t - 2theta) and sin 2t sin(2t - 4theta): every first-order
// photon-number correction is a combination of these two.
double slow(const ClosedFormInputs& in) { return std::sin(in.t) * std::sin(in.t - 2.0 * in.theta); }
double fast(const ClosedFormInputs& in) {
  return std::sin(2.0 * in.t) * std::sin(2.0 * in.t - 4.0 * in.theta);
}
}  // namespace

double mean_photon_number(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  return r2 + (in.lambda * r2 / 4.0) * ((4.0 * r2 + 6.0) * slow(in) + r2 * fast(in));
}

double squeezing_witness_f(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  const double rotating = 4.0 * r2 * (2.0 * r2 + 3.0) * std::sin(in.t) * std::sin(in.t + 2.0 * in.theta);
  const double secular = 4.0 * r2 * r2 * in.t * std::sin(4.0 * in.theta);
  const double doubled = (2.0 * r2 * r2 + 4.0 * r2 + 1.0) * sq(std::sin(2.0 * in.t));
  return (3.0 * in.lambda / 4.0) * (rotating + secular + doubled);
}

double delta_y1_squared(const ClosedFormInputs& in) {
  // (dY1)^2 = f + <2N + 1>
  return squeezing_witness_f(in) + 2.0 * mean_photon_number(in) + 1.0;
}

double squeezing_witness_f_special(double alpha_mag, double lambda, double t) {
  const double r2 = sq(alpha_mag);
  return (3.0 * lambda / 4.0) * (-4.0 * r2 * (2.0 * r2 + 3.0) * sq(std::sin(t)) +
                                 (2.0 * r2 * r2 + 4.0 * r2 + 1.0) * sq(std::sin(2.0 * t)));
}

double hoa_witness_d(int order, const ClosedFormInputs& in) {
  require_order(order);
  const double r2 = sq(in.alpha_mag);
  const double r4 = r2 * r2;
  const double lam = in.lambda;
  switch (order) {
    case 1: return (3.0 * lam * r2 / 4.0) * (2.0 * (2.0 * r2 + 1.0) * slow(in) + r2 * fast(in));
    case 2:
      return (3.0 * lam * r4 / 4.0) * ((12.0 * r2 + 10.0) * slow(in) + (3.0 * r2 + 2.0) * fast(in));
    default:
      return (3.0 * lam * r4 / 2.0) *
             ((12.0 * r4 + 14.0 * r2) * slow(in) + (3.0 * r4 + 4.0 * r2 + 1.0) * fast(in));
  }
}

double hoa_witness_d_special(int order, double alpha_mag, double lambda, double t) {
  require_special_order(order);
  const double r2 = sq(alpha_mag);
  const double r4 = r2 * r2;
  const double s1 = sq(std::sin(t));
  const double s2 = sq(std::sin(2.0 * t));
  if (order == 2) {
    return (3.0 * lambda * r4 / 4.0) * (-(12.0 * r2 + 10.0) * s1 + (3.0 * r2 + 2.0) * s2);
  }
  return (3.0 * lambda * r4 / 2.0) * (-(12.0 * r4 + 14.0 * r2) * s1 + (3.0 * r4 + 4.0 * r2 + 1.0) * s2);
}

double quadrature_witness(const ClosedFormInputs& in) {
  const double r2 = sq(in.alpha_mag);
  const double s1 = std::sin(in.t);
  return in.lambda * ((3.0 * r2 / 4.0) * in.t * std::sin(2.0 * in.theta) +
                      (1.5 * r2 + 0.75) * s1 * s1 +
                      (3.0 * r2 / 8.0) * std::sin(2.0 * in.t) * std::sin(2.0 * in.t - 2.0 * in.theta));
}

}  // namespace derived

double mean_photon_number(FormFamily family, const ClosedFormInputs& in) {
  return family == FormFamily::kPublished ? published::mean_photon_number(in)
                                          : derived::mean_photon_number(in);
}

double squeezing_witness_f(FormFamily family, const ClosedFormInputs& in) {
  return family == FormFamily::kPublished ? published::squeezing_witness_f(in)
                                          : derived::squeezing_witness_f(in);
}

double hoa_witness_d(FormFamily family, int order, const ClosedFormInputs& in) {
  return family == FormFamily::kPublished ? published::hoa_witness_d(order, in)
                                          : derived::hoa_witness_d(order, in);
}

}  // namespace quartic
