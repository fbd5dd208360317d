#pragma once

// Truncated Fock-space implementations of the same states and observables,
// used as the independent correctness oracle at small parameters.  Dense and
// deliberately slow; never run at the d ~ 10^3 scale.

#include "thermcat/types.hpp"

namespace thermcat::fock {

struct FockOperator {
  int cutoff = 0;  // N; single-mode matrices are (N+1)x(N+1)
  int modes = 1;
  CMat matrix;     // mode-0-major indexing for two modes: (i,j) -> i*(N+1)+j
  double tail_mass = 0.0;

  int dim() const { return cutoff + 1; }
};

// Smallest N whose estimated occupation tail is below epsilon for a thermal
// state of variance V displaced by |d| + beta_max (displaced-thermal photon
// statistics via scaled Laguerre recurrence).
int cutoff_selector(double V, double d, double beta_max,
                    double epsilon = 1e-10);

// exp(alpha a^dag - conj(alpha) a) built at a padded cutoff, then cropped.
CMat displacement_operator(int cutoff, Complex alpha);

FockOperator vacuum(int cutoff);
FockOperator coherent_projector(Complex alpha, int cutoff);

// Thermal occupation nbar = (V-1)/2, displaced by d.
// Throws CutoffTooSmallError if the truncated tail exceeds 1e-8.
FockOperator fock_thermal(double V, double d, int cutoff);

// (1 +- U_phi) rho_th (1 +- U_phi)^dag with U_phi = e^{i phi n}, normalized;
// the raw trace (branch weight x 4) is reported through raw_trace.
FockOperator projector_states(double V, double d, double phi, int sign,
                              int cutoff, double* raw_trace = nullptr);

// Two-mode analogue with phi = pi: (1 +- P(x)P) rho_th x rho_th (1 +- P(x)P).
FockOperator two_mode_entangled(double V, double d, int sign, int cutoff);

// (|alpha> +- |-alpha>)(<alpha| +- <-alpha|), normalized.
FockOperator cat_state(Complex alpha, int sign, int cutoff);

FockOperator tensor(const FockOperator& a, const FockOperator& b);

// Number-conserving beam splitter, exponentiated per total-photon sector
// (exact on every complete sector).
FockOperator apply_bs(const FockOperator& two_mode, double transmittance);

// Amplitude damping via the exact Kraus family at this cutoff.
FockOperator apply_loss(const FockOperator& rho, int mode, double gamma_t);

// W(beta) = (2/pi)^M Tr[rho prod_m D(beta_m) Pi D(beta_m)^dag].
double displaced_parity_wigner(const FockOperator& rho, Complex beta);
double displaced_parity_wigner(const FockOperator& rho, Complex beta1,
                               Complex beta2);

double oracle_bell(const FockOperator& rho, Complex a, Complex a2, Complex b,
                   Complex b2);

double purity(const FockOperator& rho);
double mean_photon(const FockOperator& rho, int mode);

// Hermiticity / trace / positive-semidefiniteness checks; throws
// StateCorruptionError on violation.
void validate_density(const FockOperator& rho, double herm_tol = 1e-10,
                      double trace_tol = 1e-8, double psd_tol = 1e-8);

}  // namespace thermcat::fock
