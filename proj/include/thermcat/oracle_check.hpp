#pragma once

// The small-parameter agreement suite between the closed-form Gaussian path
// and the truncated Fock oracle, shared by the oracle-check CLI subcommand,
// the oracle test binary, and the acceptance suite.

#include <string>
#include <vector>

#include "thermcat/types.hpp"

namespace thermcat {

struct OracleCheckOptions {
  std::vector<double> variances{1.0, 3.0, 5.0};
  std::vector<double> displacements{0.0, 1.0, 2.0};
  std::vector<double> phis{kPi / 2.0, kPi};
  int wigner_points = 20;
  int bell_settings = 10;
  bool include_two_mode = true;
  bool include_loss = true;
  unsigned seed = 20240817;
  double wigner_tol = 1e-6;
  double purity_tol = 1e-6;
  double mean_photon_tol = 1e-6;
  double bell_tol = 1e-4;
};

struct OracleCheckReport {
  double max_wigner_err = 0.0;
  double max_purity_err = 0.0;
  double max_mean_photon_err = 0.0;
  double max_bell_err = 0.0;
  double max_loss_bell_err = 0.0;
  int cases_run = 0;
  bool pass = false;
  std::vector<std::string> failures;

  // Branch-probability adjudication at (V = 5, d = 1): the closed-form
  // trace-based P-, the Fock-oracle P-, and the printed shortcut formula.
  double p_minus_closed = 0.0;
  double p_minus_oracle = 0.0;
  double p_minus_paper = 0.0;
};

OracleCheckReport run_oracle_check(const OracleCheckOptions& opts = {});

}  // namespace thermcat
