#pragma once

// Closed-form phase-space moments of compiled states: purity (pairwise
// Gaussian product integrals, no quadrature) and per-mode mean photon number
//   <n_m> = Int W(beta) (|beta_m|^2 - 1/2) d^2M beta.

#include "thermcat/wigner.hpp"

namespace thermcat {

// Tr rho^2 = pi^M Int W^2 over all modes.  Expects a normalized state.
double purity(const StateSum& state);

// Mean photon number of one oscillator mode (normalized state).
double mean_photon(const StateSum& state, int mode);

// Int W d^2M beta from the compiled terms; equals trace() and is used as an
// independent normalization check.
double wigner_integral(const StateSum& state);

}  // namespace thermcat
