#include "thermcat/reference.hpp"

#include <cmath>

namespace thermcat::ref {

namespace {

// 1 - e^{i phi} = -2 i sin(phi/2) e^{i phi/2}; keeps full relative precision
// for small phi, where the naive subtraction loses six digits.
Complex one_minus_eip(double phi) {
  return -2.0 * kI * std::sin(0.5 * phi) * std::exp(kI * (0.5 * phi));
}

}  // namespace

CrossTermCoeffs coeffs(double V, double phi) {
  CrossTermCoeffs c;
  c.K = 2.0 + (V - 1.0) * one_minus_eip(phi);
  const double sh = std::sin(0.5 * phi);
  const double ch = std::cos(0.5 * phi);
  c.J = (sh + kI * V * ch) / (2.0 * V * sh + 2.0 * kI * ch);
  return c;
}

double wth(Complex beta, double V, Complex d) {
  if (V < 1.0) throw BadVarianceError("wth needs V >= 1");
  const Complex diff = beta - d;
  return 2.0 / (kPi * V) * std::exp(-2.0 * std::norm(diff) / V);
}

Complex vc(Complex beta, double V, double d, double phi) {
  if (V < 1.0) throw BadVarianceError("vc needs V >= 1");
  const CrossTermCoeffs c = coeffs(V, phi);
  const Complex JK = c.J * c.K;
  if (std::abs(JK) == 0.0) throw BadParameterError("vc: JK vanished");
  const Complex eip = std::exp(kI * phi);
  const Complex expo =
      -(2.0 / c.K) * one_minus_eip(phi) * d * d -
      (1.0 / c.J) * (beta - 2.0 * eip * d / c.K) *
          (std::conj(beta) - 2.0 * d / c.K);
  return 2.0 / (kPi * JK) * std::exp(expo);
}

double wigner_ent_ref(Complex alpha, Complex beta, double V, double d,
                      double phi) {
  const Complex cross = 2.0 * alpha * vc(beta, V, d, phi);
  const Complex total = wth(beta, V, d) + cross + std::conj(cross) +
                        (4.0 * std::norm(alpha) - 1.0) *
                            wth(beta, V, d * std::exp(kI * phi));
  return (std::exp(-2.0 * std::norm(alpha)) / kPi) * total.real();
}

double wigner_sup_ref(Complex beta, double V, double d, double phi, int sign) {
  if (sign != 1 && sign != -1) throw BadParameterError("sign must be +-1");
  // Closed-form raw trace: 1 +- Re[(2/K) e^{-(2/K)(1-e^{i phi}) d^2}] per
  // conjugate pair, i.e. 2 (1 +- Re tr_cross).
  const CrossTermCoeffs c = coeffs(V, phi);
  const Complex tc =
      (2.0 / c.K) * std::exp(-(2.0 / c.K) * one_minus_eip(phi) * d * d);
  const double raw_trace = 2.0 * (1.0 + sign * tc.real());
  if (std::abs(raw_trace) < 1e-300)
    throw ZeroTraceError("wigner_sup_ref: branch has zero trace");

  const Complex crossw = vc(beta, V, d, phi);
  const double s = static_cast<double>(sign);
  const double total = wth(beta, V, d) + s * crossw.real() * 2.0 +
                       wth(beta, V, d * std::exp(kI * phi));
  return total / raw_trace;
}

std::pair<double, double> success_probability_paper(double V, double d) {
  const double e = std::exp(-2.0 * d * d / V);
  return {0.5 * (1.0 + e), 0.5 * (1.0 - e)};
}

double temperature_of_variance(double V) {
  if (V < 1.0) throw BadVarianceError("temperature needs V >= 1");
  if (V == 1.0) return 0.0;
  return 1.0 / std::log1p(2.0 / (V - 1.0));
}

}  // namespace thermcat::ref
