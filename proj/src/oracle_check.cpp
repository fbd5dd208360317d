#include "thermcat/oracle_check.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "thermcat/channels.hpp"
#include "thermcat/fock.hpp"
#include "thermcat/moments.hpp"
#include "thermcat/observables.hpp"
#include "thermcat/states.hpp"

namespace thermcat {

namespace {

Complex random_point(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

void note_failure(OracleCheckReport& report, const std::string& what,
                  double err, double tol) {
  if (err <= tol) return;
  std::ostringstream os;
  os << what << ": error " << err << " exceeds " << tol;
  report.failures.push_back(os.str());
}

}  // namespace

OracleCheckReport run_oracle_check(const OracleCheckOptions& opts) {
  OracleCheckReport report;
  std::mt19937 rng(opts.seed);

  for (double V : opts.variances) {
    for (double d : opts.displacements) {
      for (double phi : opts.phis) {
        for (int sign : {+1, -1}) {
          if (V == 1.0 && d == 0.0 && sign < 0) continue;  // zero-trace branch
          const StateSum closed =
              thermal_superposition(V, d, KerrInteractionSpec{phi}, sign);
          const int cutoff = fock::cutoff_selector(V, d, 2.0);
          const fock::FockOperator oracle =
              fock::projector_states(V, d, phi, sign, cutoff);
          fock::validate_density(oracle);
          ++report.cases_run;

          std::ostringstream tag;
          tag << "sup(V=" << V << ",d=" << d << ",phi=" << phi
              << ",sign=" << sign << ")";

          const CompiledState cs = compile(closed);
          for (int k = 0; k < opts.wigner_points; ++k) {
            const Complex beta = random_point(rng, 2.0);
            PhasePoint p(1);
            p << beta;
            const double err = std::abs(
                wigner(cs, p) - fock::displaced_parity_wigner(oracle, beta));
            report.max_wigner_err = std::max(report.max_wigner_err, err);
            note_failure(report, tag.str() + " wigner", err, opts.wigner_tol);
          }
          const double perr = std::abs(purity(closed) - fock::purity(oracle));
          report.max_purity_err = std::max(report.max_purity_err, perr);
          note_failure(report, tag.str() + " purity", perr, opts.purity_tol);

          const double nerr =
              std::abs(mean_photon(closed, 0) - fock::mean_photon(oracle, 0));
          report.max_mean_photon_err = std::max(report.max_mean_photon_err, nerr);
          note_failure(report, tag.str() + " mean photon", nerr,
                       opts.mean_photon_tol);
        }
      }
    }
  }

  if (opts.include_two_mode) {
    for (double V : opts.variances) {
      for (double d : opts.displacements) {
        for (int sign : {+1, -1}) {
          if (V == 1.0 && d == 0.0 && sign < 0) continue;
          const StateSum closed = two_mode_thermal_entangled(V, d, sign);
          const int cutoff = fock::cutoff_selector(V, d, 1.0);
          const fock::FockOperator oracle =
              fock::two_mode_entangled(V, d, sign, cutoff);
          ++report.cases_run;

          std::ostringstream tag;
          tag << "tm(V=" << V << ",d=" << d << ",sign=" << sign << ")";

          const CompiledState cs = compile(closed);
          for (int k = 0; k < opts.wigner_points / 2; ++k) {
            const Complex b1 = random_point(rng, 1.0);
            const Complex b2 = random_point(rng, 1.0);
            PhasePoint p(2);
            p << b1, b2;
            const double err = std::abs(
                wigner(cs, p) - fock::displaced_parity_wigner(oracle, b1, b2));
            report.max_wigner_err = std::max(report.max_wigner_err, err);
            note_failure(report, tag.str() + " wigner", err, opts.wigner_tol);
          }
          for (int k = 0; k < opts.bell_settings; ++k) {
            const double s = 0.5;
            const Complex a = random_point(rng, s), a2 = random_point(rng, s);
            const Complex b = random_point(rng, s), b2 = random_point(rng, s);
            const double err =
                std::abs(bell_chsh(cs, a, a2, b, b2) -
                         fock::oracle_bell(oracle, a, a2, b, b2));
            report.max_bell_err = std::max(report.max_bell_err, err);
            note_failure(report, tag.str() + " bell", err, opts.bell_tol);
          }
        }
      }
    }
  }

  // Beam-splitter-split superpositions: two-mode Wigner values of the closed
  // channel pipeline against the oracle's sector-exact splitter.
  for (double V : {1.0, 3.0}) {
    const double d = 1.0;
    const StateSum closed =
        bs_split_superposition(V, d, KerrInteractionSpec{kPi}, -1);
    const int cutoff = fock::cutoff_selector(V, d, 1.0);
    fock::FockOperator oracle = fock::projector_states(V, d, kPi, -1, cutoff);
    fock::FockOperator joint = fock::tensor(oracle, fock::vacuum(cutoff));
    joint = fock::apply_bs(joint, 0.5);
    ++report.cases_run;

    std::ostringstream tag;
    tag << "split(V=" << V << ",d=" << d << ")";
    const CompiledState cs = compile(closed);
    for (int k = 0; k < opts.wigner_points / 2; ++k) {
      const Complex b1 = random_point(rng, 1.0);
      const Complex b2 = random_point(rng, 1.0);
      PhasePoint p(2);
      p << b1, b2;
      const double err = std::abs(
          wigner(cs, p) - fock::displaced_parity_wigner(joint, b1, b2));
      report.max_wigner_err = std::max(report.max_wigner_err, err);
      note_failure(report, tag.str() + " wigner", err, opts.wigner_tol);
    }
  }

  if (opts.include_loss) {
    // Lossy split superposition at (V=3, d=1): closed channels vs the Kraus
    // oracle, compared through Bell values at fixed settings.
    const double gt = 0.1;
    StateSum closed = bs_split_superposition(3.0, 1.0, KerrInteractionSpec{kPi}, -1);
    closed = apply_loss(apply_loss(closed, 0, gt), 1, gt);

    const int cutoff = fock::cutoff_selector(3.0, 1.0, 1.0);
    fock::FockOperator oracle = fock::projector_states(3.0, 1.0, kPi, -1, cutoff);
    fock::FockOperator joint = fock::tensor(oracle, fock::vacuum(cutoff));
    joint = fock::apply_bs(joint, 0.5);
    joint = fock::apply_loss(joint, 0, gt);
    joint = fock::apply_loss(joint, 1, gt);

    const CompiledState cs = compile(closed);
    for (int k = 0; k < opts.bell_settings; ++k) {
      const double s = 0.4;
      const Complex a = random_point(rng, s), a2 = random_point(rng, s);
      const Complex b = random_point(rng, s), b2 = random_point(rng, s);
      const double err = std::abs(bell_chsh(cs, a, a2, b, b2) -
                                  fock::oracle_bell(joint, a, a2, b, b2));
      report.max_loss_bell_err = std::max(report.max_loss_bell_err, err);
      note_failure(report, "lossy split bell", err, opts.bell_tol);
    }
  }

  // Branch-probability adjudication at (V = 5, d = 1).
  {
    const double V = 5.0, d = 1.0;
    report.p_minus_closed = success_probability_trace(V, d, kPi).second;
    double raw = 0.0;
    fock::projector_states(V, d, kPi, -1, fock::cutoff_selector(V, d, 0.0), &raw);
    report.p_minus_oracle = raw / 4.0;
    report.p_minus_paper = 0.5 * (1.0 - std::exp(-2.0 * d * d / V));
    note_failure(report, "P- adjudication (oracle vs trace-based)",
                 std::abs(report.p_minus_closed - report.p_minus_oracle), 1e-6);
  }

  report.pass = report.failures.empty();
  return report;
}

}  // namespace thermcat
