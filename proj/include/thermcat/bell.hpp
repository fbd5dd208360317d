#pragma once

// Maximization of the CHSH combination |B| over the four complex measurement
// settings: a deterministic multi-start local search (fixed seed lattice +
// Nelder-Mead refinement).  Results are independent of the thread count; the
// reduction picks the maximum with a lexicographic tie-break on settings.

#include <functional>
#include <vector>

#include "thermcat/observables.hpp"

namespace thermcat {

struct NoViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BellOptions {
  int max_evals = 2000;     // simplex budget per restart
  double tol = 1e-10;       // simplex spread tolerance on |B|
  int threads = 1;          // restarts run in parallel; output is unaffected
  bool imaginary_only = false;  // restrict settings to the imaginary axis
};

struct BellResult {
  double b_max = 0.0;
  std::array<Complex, 4> settings{};  // a, a', b, b'
  int restarts_used = 0;
  bool converged = false;  // best restart ended by tolerance, not eval cap
};

BellResult maximize_bell(const StateSum& two_mode_state,
                         const BellOptions& opts = {});

struct BellScanRow {
  double parameter = 0.0;  // d, V, or gamma_t depending on the scan
  BellResult result;
};

// |B|_max of the two-mode thermal entangled state against d.
std::vector<BellScanRow> bell_curve_vs_d(double V,
                                         const std::vector<double>& d_list,
                                         int sign, const BellOptions& = {});

// |B|_max of the beam-splitter-split superposition (d = 0 branch) against V.
std::vector<BellScanRow> bell_curve_vs_V_split(
    const std::vector<double>& V_list, double d = 0.0, int sign = +1,
    const BellOptions& = {});

// Smallest gamma_t with b_max(gamma_t) = 2, found by bisection on [0, 1] to
// 1e-3; verifies the bracket and falls back to a scan when the curve is not
// monotone.  Throws NoViolationError if b_max(0) <= 2.
double survival_time(const std::function<StateSum(double)>& lossy_state,
                     const BellOptions& = {}, double tol_gamma_t = 1e-3);

}  // namespace thermcat
