#include "thermcat/channels.hpp"

#include <cmath>

namespace thermcat {

namespace {

// Applies f to every term of the state, blocks included.
template <typename F>
StateSum map_terms(const StateSum& state, F&& f) {
  StateSum out = state;
  if (out.has_qubit()) {
    for (auto& block : out.qubit->blocks)
      for (auto& t : block) f(t);
  } else {
    for (auto& t : out.terms) f(t);
  }
  return out;
}

}  // namespace

StateSum add_vacuum_mode(const StateSum& state) {
  StateSum out = map_terms(state, [](GaussianDyadicTerm& t) {
    ModeDyadic vac;
    vac.ket = AffineAmplitude::constant(0.0, t.measure.dim);
    vac.bra = AffineAmplitude::constant(0.0, t.measure.dim);
    t.modes.push_back(vac);
  });
  out.num_modes = state.num_modes + 1;
  CVec anchor(out.num_modes);
  anchor.head(state.num_modes) = state.anchor;
  anchor(state.num_modes) = 0.0;
  out.anchor = anchor;
  return out;
}

StateSum apply_beam_splitter(const StateSum& state, int mode_i, int mode_j,
                             double transmittance) {
  if (transmittance < 0.0 || transmittance > 1.0)
    throw BadTransmittanceError("beam splitter transmittance outside [0,1]");
  if (mode_i == mode_j || mode_i < 0 || mode_j < 0 ||
      mode_i >= state.num_modes || mode_j >= state.num_modes)
    throw BadParameterError("beam splitter needs two distinct oscillator modes");

  const double c = std::sqrt(transmittance);
  const double s = std::sqrt(1.0 - transmittance);

  StateSum out = map_terms(state, [&](GaussianDyadicTerm& t) {
    auto mix = [&](AffineAmplitude& x, AffineAmplitude& y) {
      AffineAmplitude xi = x, yj = y;
      x.coeff = c * xi.coeff + s * yj.coeff;
      x.offset = c * xi.offset + s * yj.offset;
      y.coeff = -s * xi.coeff + c * yj.coeff;
      y.offset = -s * xi.offset + c * yj.offset;
    };
    mix(t.modes[mode_i].ket, t.modes[mode_j].ket);
    mix(t.modes[mode_i].bra, t.modes[mode_j].bra);
  });
  const Complex ai = state.anchor(mode_i), aj = state.anchor(mode_j);
  out.anchor(mode_i) = c * ai + s * aj;
  out.anchor(mode_j) = -s * ai + c * aj;
  return out;
}

StateSum apply_loss(const StateSum& state, int mode, double gamma_t) {
  if (gamma_t < 0.0) throw NegativeTimeError("loss needs gamma_t >= 0");
  if (mode < 0 || mode >= state.num_modes)
    throw BadParameterError("apply_loss: bad mode index");
  if (gamma_t == 0.0) return state;

  const double eta = std::exp(-gamma_t);
  const double lam = 1.0 - eta;  // decay weight prefactor
  const double root = std::sqrt(eta);

  // The anchor contributes no phase: the extraction phase of the displaced
  // dyadic before loss cancels against the one of the re-anchored dyadic
  // after loss, so only the centered decay factor
  // -(lam){(|mu|^2+|nu|^2)/2 - mu conj(nu)} survives.
  StateSum out = map_terms(state, [&](GaussianDyadicTerm& t) {
    const CVec u = t.modes[mode].ket.coeff;
    const CVec v = t.modes[mode].bra.coeff;
    const Complex a = t.modes[mode].ket.offset;
    const Complex b = t.modes[mode].bra.offset;

    t.measure.P += lam * (0.5 * (u.conjugate() * u.transpose() +
                                 v.conjugate() * v.transpose()) -
                          v.conjugate() * u.transpose());
    t.measure.s += lam * (std::conj(b) * u -
                          0.5 * (std::conj(a) * u + std::conj(b) * v));
    t.measure.t += lam * (a * v.conjugate() -
                          0.5 * (a * u.conjugate() + b * v.conjugate()));
    const Complex diff = a - b;
    t.log_weight += lam * (-0.5 * diff * std::conj(diff) +
                           kI * std::imag(a * std::conj(b)));
    t.modes[mode].ket.coeff = root * u;
    t.modes[mode].ket.offset = root * a;
    t.modes[mode].bra.coeff = root * v;
    t.modes[mode].bra.offset = root * b;
  });
  out.anchor(mode) = root * state.anchor(mode);
  return out;
}

StateSum displace(const StateSum& state, int mode, Complex delta) {
  if (mode < 0 || mode >= state.num_modes)
    throw BadParameterError("displace: bad mode index");
  StateSum out = state;
  out.anchor(mode) += delta;
  return out;
}

StateSum phase_rotate(const StateSum& state, int mode, double theta) {
  if (mode < 0 || mode >= state.num_modes)
    throw BadParameterError("phase_rotate: bad mode index");
  const Complex ph = std::exp(kI * theta);
  StateSum out = map_terms(state, [&](GaussianDyadicTerm& t) {
    t.modes[mode].ket.coeff *= ph;
    t.modes[mode].ket.offset *= ph;
    t.modes[mode].bra.coeff *= ph;
    t.modes[mode].bra.offset *= ph;
  });
  out.anchor(mode) *= ph;
  return out;
}

}  // namespace thermcat
