#pragma once

// Compilation of Gaussian dyadic terms into integration-free complex
// Gaussians over phase space, and Wigner evaluation of whole states.
//
// The Wigner kernel of one coherent dyadic is
//   W_{|mu><nu|}(beta) = (2/pi) exp(-2(beta-mu)(conj(beta)-conj(nu))
//                                  + mu conj(nu) - |mu|^2/2 - |nu|^2/2),
// normalized so that Int W d^2beta = <nu|mu>.  Averaging the kernel over a
// term's measure is one closed-form Gaussian integral; the result is stored
// as exp(log_coeff + beta^dag Q beta + c.beta + d.conj(beta)) in the anchor
// frame.  The exponent class has no beta beta / conj conj monomials by
// construction.

#include <vector>

#include "thermcat/state.hpp"

namespace thermcat {

Complex coherent_dyadic_wigner_kernel(Complex mu, Complex nu, Complex beta);

struct WignerGaussianTerm {
  int num_modes = 0;
  CMat quad;      // quad(m,n) multiplies conj(beta_m) beta_n
  CVec lin;       // lin(n) multiplies beta_n
  CVec lin_bar;   // lin_bar(m) multiplies conj(beta_m)
  Complex log_coeff{0.0, 0.0};
};

// Closed-form measure integral of the kernel product over all modes.
// Throws NonConvergentError (propagated) when the combined Gaussian diverges.
WignerGaussianTerm compile_term(const GaussianDyadicTerm& term);

Complex eval_term(const WignerGaussianTerm& term, const CVec& beta);

// Fixed Fock kernels for the qubit register, matching the |0>,|1> dyadics:
//   W_{|0><0|} = (2/pi) e^{-2|a|^2}            W_{|1><1|} = ... (4|a|^2 - 1)
//   W_{|1><0|} = (2/pi) e^{-2|a|^2} 2a         W_{|0><1|} = conj.
Complex qubit_kernel(int i, int j, Complex alpha);

struct CompiledState {
  int num_modes = 0;
  bool with_qubit = false;
  std::vector<WignerGaussianTerm> terms;
  std::array<std::vector<WignerGaussianTerm>, 4> qubit_blocks;
  CVec anchor;
};

CompiledState compile(const StateSum& state);

// Wigner value at a phase point (qubit coordinate first when present).
// Throws ImaginaryResidualError if the imaginary residual exceeds
// 1e-9 |Re| + 1e-12 -- that signals a broken Hermiticity invariant.
double wigner(const CompiledState& state, const PhasePoint& point);
double wigner(const StateSum& state, const PhasePoint& point);

// Complex sum over terms without the residual check (test/diagnostic use).
Complex wigner_complex(const CompiledState& state, const PhasePoint& point);

// Integrates out all modes except `keep`, returning a single-mode Gaussian
// in the same anchor frame.
WignerGaussianTerm reduce_to_mode(const WignerGaussianTerm& term, int keep);

// log of Int exp(...) d^2M beta  for one compiled term (its phase-space
// integral; equals the term's trace contribution).
Complex log_integral(const WignerGaussianTerm& term);

}  // namespace thermcat
