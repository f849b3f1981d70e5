#pragma once

// First-order (in lambda) treatment of the quartic oscillator in the
// interaction picture: the operator solution a_I(t) as a matrix, and scalar
// closed forms for the photon number, amplitude-squared squeezing and the
// higher-order antibunching witnesses over an initial coherent state.
//
// Two closed-form families are provided:
//   published::  the closed forms as published for this model, transcribed
//                term by term;
//   derived::    the first-order expressions re-derived from a_I(t) below.
// They agree for d(1) and disagree at O(lambda) elsewhere; only derived::
// converges to the exact evolution as lambda^2. See README.

#include "quartic/fock_core.hpp"
#include "quartic/moments.hpp"

namespace quartic {

struct ClosedFormInputs {
  double alpha_mag = 0.0;
  double theta = 0.0;
  double lambda = 0.0;
  double t = 0.0;

  static ClosedFormInputs from(const ModelParams& p, double t) {
    return {p.alpha_mag, p.theta, p.lambda, t};
  }
};

enum class FormFamily { kPublished, kDerived };

/// a_I(t) = U_I^dagger a U_I truncated at first order:
///   a - (i lambda / 8) [ 6t a + 6t a+ a^2 + 6 e^{it} sin t a+^2 a
///                        + e^{2it} sin 2t a+^3 + 6 e^{it} sin t a+
///                        + 2 e^{-it} sin t a^3 ].
OperatorMatrix first_order_annihilation(const ModelParams& params, double t);

/// <alpha| a_I+^m a_I^n |alpha> built from first_order_annihilation. Carries
/// the O(lambda^2) residue of the operator products.
MomentSet first_order_moments(const ModelParams& params, double t);

namespace published {

namespace terms {
// Photon number bracket: <N> = |a|^2 - (lambda/4) (photon_a - photon_b).
double photon_a(const ClosedFormInputs& in);  // 2|a|^2 (2|a|^2+3) sin t sin(2theta - t)
double photon_b(const ClosedFormInputs& in);  // |a|^4 sin 2t sin(2(2theta - 2t))

// Variance bracket: (dY1)^2 = 2|a|^2 + 1 - (lambda/4) (v1 - v2 + v3 - v4 - v5).
double variance_1(const ClosedFormInputs& in);  // 4|a|^2 (2|a|^2+3) sin t sin(2theta - t)
double variance_2(const ClosedFormInputs& in);  // 12 |a|^4 t sin 4theta
double variance_3(const ClosedFormInputs& in);  // 3 (2|a|^4 + 4|a|^2 + 1) sin^2 2t
double variance_4(const ClosedFormInputs& in);  // 12 |a|^2 (2|a|^2+3) sin t sin(2theta + t)
double variance_5(const ClosedFormInputs& in);  // 2 |a|^4 sin 2t sin(2(2theta - 2t))

// Squeezing bracket: f = -(3 lambda/4) (-f1 - f2 + f3).
double squeeze_1(const ClosedFormInputs& in);  // 4|a|^2 (2|a|^2+3) sin t sin(t + 2theta)
double squeeze_2(const ClosedFormInputs& in);  // 4 |a|^4 t sin 4theta  (secular)
double squeeze_3(const ClosedFormInputs& in);  // (2|a|^4 + 4|a|^2 + 1) sin^2 2t
}  // namespace terms

double mean_photon_number(const ClosedFormInputs& in);
double delta_y1_squared(const ClosedFormInputs& in);
double squeezing_witness_f(const ClosedFormInputs& in);
/// f at theta = pi/2; never positive.
double squeezing_witness_f_special(double alpha_mag, double lambda, double t);
/// d(l) for l in {1,2,3}; other orders throw InvalidArgument.
double hoa_witness_d(int order, const ClosedFormInputs& in);
/// d(2), d(3) at theta = pi/2; other orders throw InvalidArgument.
double hoa_witness_d_special(int order, double alpha_mag, double lambda, double t);

}  // namespace published

namespace derived {

double mean_photon_number(const ClosedFormInputs& in);
double delta_y1_squared(const ClosedFormInputs& in);
double squeezing_witness_f(const ClosedFormInputs& in);
double squeezing_witness_f_special(double alpha_mag, double lambda, double t);
double hoa_witness_d(int order, const ClosedFormInputs& in);
double hoa_witness_d_special(int order, double alpha_mag, double lambda, double t);
/// (Delta X)^2 - 1/2 for X = (a+ + a)/sqrt(2).
double quadrature_witness(const ClosedFormInputs& in);

}  // namespace derived

// Family dispatch used by the sweep front end.
double mean_photon_number(FormFamily family, const ClosedFormInputs& in);
double squeezing_witness_f(FormFamily family, const ClosedFormInputs& in);
double hoa_witness_d(FormFamily family, int order, const ClosedFormInputs& in);

}  // namespace quartic
