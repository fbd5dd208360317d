#pragma once

// Measured quantities: quadrature marginals (closed-form 1D reduction of the
// compiled Gaussians, no numerical integration), fringe visibility and
// spacing, displaced-parity correlations, the CHSH combination at fixed
// settings, and linear entropy.

#include <optional>
#include <vector>

#include "thermcat/moments.hpp"
#include "thermcat/wigner.hpp"

namespace thermcat {

struct MarginalCurve {
  double theta = 0.0;  // quadrature angle; 0 is x, pi/2 is p
  int mode = 0;
  std::vector<double> coordinate;
  std::vector<double> density;
};

struct MarginalOptions {
  std::optional<std::pair<double, double>> window;
  std::optional<int> samples;
  int fringe_oversample = 64;  // samples per fringe period when auto-sizing
};

// Distribution of the theta-quadrature of one mode; the state is phase
// rotated by -theta so a single x-marginal code path serves every axis.
MarginalCurve marginal(const StateSum& state, int mode, double theta,
                       const MarginalOptions& opts = {});

// Trapezoid integral of a curve (tests and normalization checks).
double integrate(const MarginalCurve& curve);

struct VisibilityResult {
  double v = 0.0;
  double i_max = 0.0;
  double i_min = 0.0;
  double x_max = 0.0;  // positions of the extrema used
  double x_min = 0.0;
};

// Fringe contrast v = (I_max - I_min)/(I_max + I_min); I_min is taken between
// the local maxima adjacent to the global one, so a unimodal curve reads 0.
// Throws ResolutionTooCoarseError when a caller-forced grid cannot resolve
// the state's own fringe period.
VisibilityResult visibility(const StateSum& state, int mode, double theta,
                            const MarginalOptions& opts = {});

// Mean distance between consecutive fringe maxima (parabola-refined).
// Throws NoFringesError with fewer than three maxima.
double fringe_spacing(const StateSum& state, int mode, double theta,
                      const MarginalOptions& opts = {});

// (pi/2)^M x Wigner value: the expectation of the product of displaced
// photon-number parities.  Throws StateCorruptionError when |E| > 1 + 1e-8.
double parity_correlation(const StateSum& state, const PhasePoint& point);
double parity_correlation(const CompiledState& state, const PhasePoint& point);

// B = (pi^2/4) [W(a,b) + W(a,b') + W(a',b) - W(a',b')] for a two-mode state.
double bell_chsh(const StateSum& state, Complex a, Complex a2, Complex b,
                 Complex b2);
double bell_chsh(const CompiledState& state, Complex a, Complex a2, Complex b,
                 Complex b2);

// M = 1 - Tr rho^2.
double linear_entropy(const StateSum& state);

}  // namespace thermcat
