#pragma once

// Exact channels on StateSum values: beam splitter, amplitude damping,
// displacement, phase rotation.  All act per dyadic under the integral and
// stay inside the Gaussian exponent class, so trace bookkeeping is exact.

#include "thermcat/state.hpp"

namespace thermcat {

// Appends a vacuum mode (anchor 0, point dyadic |0><0|).
StateSum add_vacuum_mode(const StateSum& state);

// Coherent amplitudes mix as
//   (A_i, A_j) -> (sqrt(T) A_i + sqrt(1-T) A_j, -sqrt(1-T) A_i + sqrt(T) A_j).
// Throws BadTransmittanceError outside [0,1].
StateSum apply_beam_splitter(const StateSum& state, int mode_i, int mode_j,
                             double transmittance);

// Amplitude damping for time gamma_t (energy decay rate times time):
//   |A><B| -> exp[-(1-eta){(|A|^2+|B|^2)/2 - A conj(B)}] |sqrt(eta)A><sqrt(eta)B|
// with eta = exp(-gamma_t), applied per dyadic under the integral.
StateSum apply_loss(const StateSum& state, int mode, double gamma_t);

// Exactly unitary displacement / phase rotation of one mode.
StateSum displace(const StateSum& state, int mode, Complex delta);
StateSum phase_rotate(const StateSum& state, int mode, double theta);

}  // namespace thermcat
