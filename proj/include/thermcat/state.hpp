#pragma once

// StateSum: a finite sum of Gaussian dyadic terms representing a (possibly
// unnormalized) density operator over oscillator modes, optionally tensored
// with one two-level (qubit) register kept as a 2x2 grid of term lists.
//
// Every state carries a per-mode anchor displacement c:
//     rho = D(c) (sum of terms) D(c)^dag.
// Constructors center their terms on the anchor so that all stored
// coefficients stay moderate even when the physical displacement is huge
// (d ~ 10^3); weights and norms are kept as complex logs for the same reason.

#include <array>
#include <optional>
#include <vector>

#include "thermcat/gaussian.hpp"
#include "thermcat/types.hpp"

namespace thermcat {

struct QubitBlocks {
  // blocks[2*i + j] holds the terms multiplying |i><j| of the qubit.
  std::array<std::vector<GaussianDyadicTerm>, 4> blocks;

  std::vector<GaussianDyadicTerm>& operator()(int i, int j) {
    return blocks[2 * i + j];
  }
  const std::vector<GaussianDyadicTerm>& operator()(int i, int j) const {
    return blocks[2 * i + j];
  }
};

enum class NormStatus { raw, normalized };

struct StateSum {
  int num_modes = 0;  // oscillator modes
  std::vector<GaussianDyadicTerm> terms;
  std::optional<QubitBlocks> qubit;
  CVec anchor;  // size num_modes
  NormStatus norm_status = NormStatus::raw;
  double norm_constant = 1.0;  // trace divided out by normalize()

  bool has_qubit() const { return qubit.has_value(); }
  // Phase-point dimension: qubit coordinate (if any) first, then oscillators.
  int point_dim() const { return num_modes + (has_qubit() ? 1 : 0); }
};

// Checks the structural Hermiticity invariant: every term's adjoint is also
// present (in the transposed block for qubit states), or the term is
// self-adjoint.  Throws ImaginaryResidualError on violation.
void verify_hermitian_pairing(const StateSum& state, double tol = 1e-9);

// Trace via closed-form per-term integrals.  Real up to a checked residual.
double trace(const StateSum& state);

// Divides all weights by the trace and records it. Throws ZeroTraceError when
// |trace| < 1e-300.
StateSum normalize(const StateSum& state);

// Sum of the two diagonal qubit blocks as a plain oscillator state.
StateSum trace_out_qubit(const StateSum& state);

// Partial trace over one oscillator mode (mode indices count oscillators
// only).  Qubit register, if present, is untouched.
StateSum partial_trace(const StateSum& state, int mode);

}  // namespace thermcat
