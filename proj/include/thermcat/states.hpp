#pragma once

// Constructors for every state in the toolkit, as normalized StateSum values.
//
// The displaced thermal state is
//   rho_th(V, d) = Int d^2alpha P_th(V, d) |alpha><alpha|,
//   P_th(V, d) = 2/(pi(V-1)) exp(-2|alpha - d|^2/(V-1)),
// with phase-space variance V (V = 1 pure, zero temperature) and displacement
// d.  A qubit prepared in (|0>+|1>)/sqrt(2) coupled through a cross-Kerr
// interaction imprints a conditional rotation phi on the thermal mode;
// measuring the qubit in (|0> +- |1>)/sqrt(2) leaves the thermal-state
// superposition
//   rho_sup(+-) ~ Int P_th { |a><a| +- |a e^{i phi}><a| +- |a><a e^{i phi}|
//                            + |a e^{i phi}><a e^{i phi}| }.
//
// Internally every constructor centers its integration variable on the
// thermal displacement and anchors the state at d(1 + e^{i phi})/2, so the
// stored coefficients stay O(sqrt(V) + d*phi) even for d ~ 10^3.

#include "thermcat/state.hpp"

namespace thermcat {

struct KerrInteractionSpec {
  double phi = 0.0;  // phi = lambda * t; only the product enters
};

struct MeasurementOutcome {
  int sign = +1;  // +1 or -1, the (|0> +- |1>)/sqrt(2) projection
  double probability = 0.0;
};

// Single displaced thermal state; V = 1 degenerates to a coherent state
// (point measure).  Throws BadVarianceError for V < 1.
StateSum displaced_thermal(double V, Complex d);

// The post-interaction qubit (x) oscillator state with qubit blocks filled.
StateSum micro_macro_entangled(double V, Complex d, KerrInteractionSpec spec);

// Projects the qubit of a block state onto (|0> +- |1>)/sqrt(2); returns the
// normalized remaining oscillator state and the outcome probability.
// Throws ZeroTraceError when the branch has vanishing probability.
std::pair<StateSum, MeasurementOutcome> measure_qubit_superposed_basis(
    const StateSum& state, int sign);

// Direct 4-term construction of the thermal-state superposition (equal to the
// construct-then-measure path pointwise).
StateSum thermal_superposition(double V, Complex d, KerrInteractionSpec spec,
                               int sign);

// Two-mode analogue (phi = pi):
//   rho_tm(+-) ~ rho_th(V,d) (x) rho_th(V,d) +- sigma(V,d) (x) sigma(V,d)
//                +- sigma(V,-d) (x) sigma(V,-d) + rho_th(V,-d) (x) rho_th(V,-d)
// with sigma(V, d) = Int P_th(V, d) |-alpha><alpha|.
StateSum two_mode_thermal_entangled(double V, Complex d, int sign);

// thermal_superposition (x) vacuum fed through a beam splitter.
StateSum bs_split_superposition(double V, Complex d, KerrInteractionSpec spec,
                                int sign, double transmittance = 0.5);

// Pure coherent-state cat (|alpha> +- |-alpha>)/norm; the V = 1 special case.
StateSum pure_cat(Complex alpha, int sign);

// Trace-based branch probabilities (P+, P-) for the superposed-basis
// measurement, from the closed-form raw traces (first principles, not the
// printed shortcut formula -- see reference::success_probability_paper).
std::pair<double, double> success_probability_trace(double V, double d,
                                                    double phi);

}  // namespace thermcat
