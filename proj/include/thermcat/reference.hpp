#pragma once

// Literal transcriptions of the closed-form Wigner expressions, kept as an
// independent evaluation path for cross-validation against the compiled
// Gaussian pipeline.  This module favors verbatim structure over speed.
//
//   W_th(a; d)  = 2/(pi V) exp(-2|a - d|^2 / V)
//   V_c(a; d)   = 2/(pi J K) exp[-(2/K)(1 - e^{i phi}) d^2
//                   - (1/J)(a - 2 e^{i phi} d / K)(conj(a) - 2 d / K)]
//   K = 2 + (V - 1)(1 - e^{i phi})
//   J = (sin(phi/2) + i V cos(phi/2)) / (2 V sin(phi/2) + 2 i cos(phi/2))
//
// and the entangled / superposed combinations built from them.

#include "thermcat/types.hpp"

namespace thermcat::ref {

struct CrossTermCoeffs {
  Complex K;
  Complex J;
};

CrossTermCoeffs coeffs(double V, double phi);

// Thermal Wigner function (complex center allowed).
double wth(Complex beta, double V, Complex d);

// Cross-term Wigner function; d real, V >= 1.
Complex vc(Complex beta, double V, double d, double phi);

// Two-mode qubit (x) oscillator Wigner function.
double wigner_ent_ref(Complex alpha, Complex beta, double V, double d,
                      double phi);

// Thermal-superposition Wigner function, normalized with the closed-form
// trace (no quadrature).  Throws ZeroTraceError for a vanishing branch.
double wigner_sup_ref(Complex beta, double V, double d, double phi, int sign);

// The printed shortcut (P+, P-) = (1 +- exp(-2 d^2/V))/2, kept verbatim for
// side-by-side comparison with the trace-based probabilities.
std::pair<double, double> success_probability_paper(double V, double d);

// tau = 1 / ln((V+1)/(V-1)); V = 1 maps to zero temperature.
double temperature_of_variance(double V);

}  // namespace thermcat::ref
