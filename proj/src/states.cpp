#include "thermcat/states.hpp"

#include <cmath>

#include "thermcat/channels.hpp"

namespace thermcat {

namespace {

// e^{i phi} - 1 = 2 i sin(phi/2) e^{i phi/2}, full relative precision even
// for phi ~ 1e-3 where the naive subtraction loses digits.
Complex expm1_i(double phi) {
  return 2.0 * kI * std::sin(0.5 * phi) * std::exp(kI * (0.5 * phi));
}

GaussianMeasure thermal_measure(double V) {
  if (V < 1.0) throw BadVarianceError("thermal state needs V >= 1");
  if (V == 1.0) return GaussianMeasure::point_mass();
  const double w = V - 1.0;
  return GaussianMeasure::isotropic(2.0 / w, std::log(2.0 / (kPi * w)));
}

// The four integrand dyadics of the Kerr-coupled thermal state, centered on
// the anchor c0 = d (1 + e^{i phi})/2 with the integration variable centered
// on the thermal displacement (alpha = z + d, d real).
// kind: 0 -> |a><a|, 1 -> |a e^{i phi}><a|, 2 -> adjoint of 1,
//       3 -> |a e^{i phi}><a e^{i phi}|.
GaussianDyadicTerm kerr_branch_term(double V, double d, double phi, int kind) {
  const Complex em1 = expm1_i(phi);      // e^{i phi} - 1
  const Complex eip = 1.0 + em1;         // e^{i phi}
  const Complex c0 = 0.5 * d * (2.0 + em1);  // d (1 + e^{i phi})/2
  const Complex off_plain = d - c0;          // = -d (e^{i phi}-1)/2
  const Complex off_rot = d * eip - c0;      // = +d (e^{i phi}-1)/2

  GaussianDyadicTerm t;
  t.measure = thermal_measure(V);
  const int dim = t.measure.dim;

  auto plain = [&] {
    return dim == 0 ? AffineAmplitude::constant(off_plain)
                    : AffineAmplitude::variable(0, dim, 1.0, off_plain);
  };
  auto rotated = [&] {
    return dim == 0 ? AffineAmplitude::constant(off_rot)
                    : AffineAmplitude::variable(0, dim, eip, off_rot);
  };

  ModeDyadic mode;
  switch (kind) {
    case 0:
      mode.ket = plain();
      mode.bra = plain();
      break;
    case 3:
      mode.ket = rotated();
      mode.bra = rotated();
      break;
    case 1: {
      mode.ket = rotated();
      mode.bra = plain();
      // |mu><nu| = D(c0) |mu - c0><nu - c0| D(c0)^dag exp(+i Im(conj(c0)(mu - nu)))
      // with mu - nu = (e^{i phi} - 1)(z + d).
      const Complex f = std::conj(c0) * em1;
      t.log_weight += kI * std::imag(f * d);
      if (dim == 1) {
        t.measure.s(0) += 0.5 * f;
        t.measure.t(0) += -0.5 * std::conj(f);
      }
      break;
    }
    case 2:
      return adjoint(kerr_branch_term(V, d, phi, 1));
    default:
      throw BadParameterError("kerr_branch_term: bad kind");
  }
  t.modes.push_back(mode);
  return t;
}

// Rotates a real-d canonical construction back to a complex displacement.
StateSum restore_phase(StateSum state, Complex d) {
  if (d.imag() == 0.0 && d.real() >= 0.0) return state;
  const double chi = std::arg(d);
  for (int m = 0; m < state.num_modes; ++m) state = phase_rotate(state, m, chi);
  return state;
}

}  // namespace

StateSum displaced_thermal(double V, Complex d) {
  GaussianDyadicTerm t;
  t.measure = thermal_measure(V);
  ModeDyadic mode;
  mode.ket = t.measure.dim == 0 ? AffineAmplitude::constant(0.0)
                                : AffineAmplitude::variable(0, 1, 1.0, 0.0);
  mode.bra = mode.ket;
  t.modes.push_back(mode);

  StateSum out;
  out.num_modes = 1;
  out.terms.push_back(t);
  out.anchor = CVec::Constant(1, d);
  out.norm_status = NormStatus::normalized;
  out.norm_constant = 1.0;
  return out;
}

StateSum micro_macro_entangled(double V, Complex d, KerrInteractionSpec spec) {
  const double dm = std::abs(d);
  QubitBlocks blocks;
  const Complex half = std::log(Complex(0.5, 0.0));
  auto put = [&](int i, int j, int kind) {
    GaussianDyadicTerm t = kerr_branch_term(V, dm, spec.phi, kind);
    t.log_weight += half;
    blocks(i, j).push_back(t);
  };
  put(0, 0, 0);
  put(1, 0, 1);
  put(0, 1, 2);
  put(1, 1, 3);

  StateSum out;
  out.num_modes = 1;
  out.qubit = blocks;
  out.anchor = CVec::Constant(1, 0.5 * dm * (2.0 + expm1_i(spec.phi)));
  verify_hermitian_pairing(out);
  return restore_phase(normalize(out), d);
}

std::pair<StateSum, MeasurementOutcome> measure_qubit_superposed_basis(
    const StateSum& state, int sign) {
  if (!state.has_qubit())
    throw BadParameterError("measurement needs a qubit register");
  if (sign != 1 && sign != -1)
    throw BadParameterError("measurement sign must be +1 or -1");

  const double input_trace = trace(state);
  StateSum raw;
  raw.num_modes = state.num_modes;
  raw.anchor = state.anchor;
  const Complex half = std::log(Complex(0.5, 0.0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& src : (*state.qubit)(i, j)) {
        GaussianDyadicTerm t = src;
        t.log_weight += half;
        if (sign < 0 && ((i + j) % 2 == 1)) t.log_weight += Complex(0.0, kPi);
        raw.terms.push_back(t);
      }

  MeasurementOutcome outcome;
  outcome.sign = sign;
  outcome.probability = trace(raw) / input_trace;
  return {normalize(raw), outcome};
}

StateSum thermal_superposition(double V, Complex d, KerrInteractionSpec spec,
                               int sign) {
  if (sign != 1 && sign != -1)
    throw BadParameterError("superposition sign must be +1 or -1");
  const double dm = std::abs(d);
  StateSum out;
  out.num_modes = 1;
  out.anchor = CVec::Constant(1, 0.5 * dm * (2.0 + expm1_i(spec.phi)));
  for (int kind = 0; kind < 4; ++kind) {
    GaussianDyadicTerm t = kerr_branch_term(V, dm, spec.phi, kind);
    if (sign < 0 && (kind == 1 || kind == 2)) t.log_weight += Complex(0.0, kPi);
    out.terms.push_back(t);
  }
  verify_hermitian_pairing(out);
  return restore_phase(normalize(out), d);
}

StateSum two_mode_thermal_entangled(double V, Complex d, int sign) {
  if (sign != 1 && sign != -1)
    throw BadParameterError("sign must be +1 or -1");
  const double dm = std::abs(d);

  GaussianMeasure single = thermal_measure(V);
  const int dim = single.dim == 0 ? 0 : 2;
  GaussianMeasure joint = GaussianMeasure::point_mass();
  if (dim == 2) {
    joint.dim = 2;
    joint.P = CMat::Zero(2, 2);
    joint.P(0, 0) = joint.P(1, 1) = single.P(0, 0);
    joint.s = CVec::Zero(2);
    joint.t = CVec::Zero(2);
    joint.log_norm = 2.0 * single.log_norm;
  }

  // kind 0: rho_th(d) x rho_th(d);  kind 1: sigma(d) x sigma(d);
  // kind 2 = adjoint(kind 1) = sigma(-d) x sigma(-d);
  // kind 3: rho_th(-d) x rho_th(-d).
  auto make = [&](int kind) {
    GaussianDyadicTerm t;
    t.measure = joint;
    for (int m = 0; m < 2; ++m) {
      const double center = (kind == 3) ? -dm : dm;
      AffineAmplitude plain = dim == 0
                                  ? AffineAmplitude::constant(center)
                                  : AffineAmplitude::variable(m, 2, 1.0, center);
      AffineAmplitude flipped = dim == 0
                                    ? AffineAmplitude::constant(-center)
                                    : AffineAmplitude::variable(m, 2, -1.0,
                                                                -center);
      ModeDyadic mode;
      if (kind == 0 || kind == 3) {
        mode.ket = plain;
        mode.bra = plain;
      } else {
        mode.ket = flipped;  // |-alpha><alpha| per mode
        mode.bra = plain;
      }
      t.modes.push_back(mode);
    }
    return t;
  };

  StateSum out;
  out.num_modes = 2;
  out.anchor = CVec::Zero(2);
  out.terms.push_back(make(0));
  GaussianDyadicTerm cross = make(1);
  if (sign < 0) cross.log_weight += Complex(0.0, kPi);
  out.terms.push_back(cross);
  out.terms.push_back(adjoint(cross));
  out.terms.push_back(make(3));
  verify_hermitian_pairing(out);
  return restore_phase(normalize(out), d);
}

StateSum bs_split_superposition(double V, Complex d, KerrInteractionSpec spec,
                                int sign, double transmittance) {
  StateSum sup = thermal_superposition(V, d, spec, sign);
  return apply_beam_splitter(add_vacuum_mode(sup), 0, 1, transmittance);
}

StateSum pure_cat(Complex alpha, int sign) {
  if (sign != 1 && sign != -1)
    throw BadParameterError("cat sign must be +1 or -1");
  StateSum out;
  out.num_modes = 1;
  out.anchor = CVec::Zero(1);
  auto dyadic = [&](Complex ket, Complex bra, bool flip) {
    GaussianDyadicTerm t;
    t.measure = GaussianMeasure::point_mass();
    ModeDyadic mode;
    mode.ket = AffineAmplitude::constant(ket);
    mode.bra = AffineAmplitude::constant(bra);
    t.modes.push_back(mode);
    if (flip) t.log_weight += Complex(0.0, kPi);
    return t;
  };
  const bool minus = sign < 0;
  out.terms.push_back(dyadic(alpha, alpha, false));
  out.terms.push_back(dyadic(-alpha, alpha, minus));
  out.terms.push_back(dyadic(alpha, -alpha, minus));
  out.terms.push_back(dyadic(-alpha, -alpha, false));
  verify_hermitian_pairing(out);
  return normalize(out);
}

std::pair<double, double> success_probability_trace(double V, double d,
                                                    double phi) {
  if (V < 1.0) throw BadVarianceError("success probability needs V >= 1");
  const Complex kappa = -expm1_i(phi);  // 1 - e^{i phi}
  const Complex K = 2.0 + (V - 1.0) * kappa;
  const Complex cross = (2.0 / K) * std::exp(-(2.0 / K) * kappa * d * d);
  const double re = cross.real();
  return {0.5 * (1.0 + re), 0.5 * (1.0 - re)};
}

}  // namespace thermcat
