#include <doctest.h>

#include <cmath>
#include <random>

#include "thermcat/channels.hpp"
#include "thermcat/observables.hpp"
#include "thermcat/states.hpp"

using namespace thermcat;

namespace {

// Simpson integration of wigner() along p at fixed x (marginal consistency).
double wigner_p_integral(const CompiledState& cs, double x, double p_max,
                         int n) {
  if (n % 2 == 1) ++n;
  const double h = 2.0 * p_max / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    PhasePoint pt(1);
    pt << Complex(x, -p_max + i * h);
    const double w = wigner(cs, pt);
    sum += w * (i == 0 || i == n ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0));
  }
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("vacuum marginal is the squeezed-free Gaussian") {
  const MarginalCurve c = marginal(displaced_thermal(1.0, 0.0), 0, 0.0);
  CHECK(integrate(c) == doctest::Approx(1.0).epsilon(1e-9));
  // density(x) = sqrt(2/pi) e^{-2 x^2}
  const double mid = c.density[c.density.size() / 2];
  CHECK(mid == doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(1e-9));
}

TEST_CASE("x-marginal of the macroscopic superposition shows two lobes") {
  const StateSum s = thermal_superposition(100.0, 100.0, {kPi}, -1);
  const MarginalCurve c = marginal(s, 0, 0.0);
  CHECK(integrate(c) == doctest::Approx(1.0).epsilon(1e-6));

  // Peak positions near +-100.
  double best_pos = 0.0, best_neg = 0.0, vpos = 0.0, vneg = 0.0;
  for (size_t i = 0; i < c.coordinate.size(); ++i) {
    if (c.coordinate[i] > 0 && c.density[i] > vpos) {
      vpos = c.density[i];
      best_pos = c.coordinate[i];
    }
    if (c.coordinate[i] < 0 && c.density[i] > vneg) {
      vneg = c.density[i];
      best_neg = c.coordinate[i];
    }
  }
  CHECK(best_pos == doctest::Approx(100.0).epsilon(1e-3));
  CHECK(best_neg == doctest::Approx(-100.0).epsilon(1e-3));
}

TEST_CASE("p-marginal of the minus state vanishes at the origin") {
  for (double V : {3.0, 100.0, 1000.0}) {
    const double d = (V == 3.0) ? 1.0 : std::sqrt(V);
    const StateSum s = thermal_superposition(V, d, {kPi}, -1);
    const MarginalCurve c = marginal(s, 0, kPi / 2.0);
    // Value at p = 0 (center sample of the symmetric window).
    double at0 = 1.0;
    double best = 1e300;
    for (size_t i = 0; i < c.coordinate.size(); ++i)
      if (std::abs(c.coordinate[i]) < best) {
        best = std::abs(c.coordinate[i]);
        at0 = c.density[i];
      }
    const double peak = *std::max_element(c.density.begin(), c.density.end());
    CHECK(std::abs(at0) < 1e-6 * peak);
  }
}

TEST_CASE("marginal agrees with direct Wigner integration") {
  const StateSum s = thermal_superposition(3.0, 1.0, {kPi}, -1);
  const CompiledState cs = compile(s);
  const MarginalCurve c = marginal(s, 0, 0.0);
  const size_t n = c.coordinate.size();
  for (size_t i : {n / 2, n / 3, n / 5, 2 * n / 3}) {
    const double direct = wigner_p_integral(cs, c.coordinate[i], 6.0, 600);
    CHECK(c.density[i] == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("visibility of the interference fringes") {
  SUBCASE("unity visibility for the macroscopic minus state") {
    const VisibilityResult v =
        visibility(thermal_superposition(100.0, 100.0, {kPi}, -1), 0, kPi / 2.0);
    CHECK(v.v >= 0.999);
    CHECK(v.v <= 1.0 + 1e-12);
    CHECK(v.i_min >= 0.0);
  }
  SUBCASE("unimodal curves read zero") {
    const VisibilityResult v =
        visibility(displaced_thermal(100.0, 100.0), 0, kPi / 2.0);
    CHECK(v.v == 0.0);
  }
  SUBCASE("visibility stays 1 when d scales with sqrt(V)") {
    for (double V : {1.0, 5.0, 100.0, 1000.0}) {
      const double d = 10.0 * std::sqrt(V);
      const VisibilityResult v =
          visibility(thermal_superposition(V, d, {kPi}, -1), 0, kPi / 2.0);
      CHECK(v.v >= 1.0 - 1e-9);
    }
  }
  SUBCASE("forced coarse grids are rejected") {
    MarginalOptions opts;
    opts.samples = 101;
    CHECK_THROWS_AS(visibility(thermal_superposition(100.0, 100.0, {kPi}, -1),
                               0, kPi / 2.0, opts),
                    ResolutionTooCoarseError);
  }
}

TEST_CASE("fringe spacing follows pi/(2d) and ignores V") {
  const double d = 100.0;
  const double s100 =
      fringe_spacing(thermal_superposition(100.0, d, {kPi}, -1), 0, kPi / 2.0);
  CHECK(s100 == doctest::Approx(kPi / (2.0 * d)).epsilon(0.005));

  const double s1000 =
      fringe_spacing(thermal_superposition(1000.0, d, {kPi}, -1), 0, kPi / 2.0);
  CHECK(s1000 == doctest::Approx(kPi / (2.0 * d)).epsilon(0.005));
  CHECK(std::abs(s100 - s1000) < 1e-6);

  const double scat = fringe_spacing(pure_cat(d, -1), 0, kPi / 2.0);
  CHECK(scat == doctest::Approx(kPi / (2.0 * d)).epsilon(0.005));
  CHECK(std::abs(s100 - scat) < 1e-6);

  CHECK_THROWS_AS(fringe_spacing(displaced_thermal(3.0, 0.0), 0, 0.0),
                  NoFringesError);
}

TEST_CASE("rotated-axis fringes of the weak-nonlinearity state") {
  // V=5, d=2000, phi=pi/1000: lobes separate along the rotated p' axis and
  // the fringes live in the rotated x' marginal (axis rotated by pi/2000).
  const StateSum s = thermal_superposition(5.0, 2000.0, {kPi / 1000.0}, -1);
  const double theta = kPi / 2000.0;

  const VisibilityResult vx = visibility(s, 0, theta);
  CHECK(vx.v >= 0.999);

  // The p' marginal shows the two thermal humps at +- d sin(phi/2) ~ +- pi.
  const MarginalCurve cp = marginal(s, 0, theta + kPi / 2.0);
  CHECK(integrate(cp) == doctest::Approx(1.0).epsilon(1e-6));
  double best_pos = 0.0, vpos = 0.0;
  for (size_t i = 0; i < cp.coordinate.size(); ++i)
    if (cp.coordinate[i] > 0 && cp.density[i] > vpos) {
      vpos = cp.density[i];
      best_pos = cp.coordinate[i];
    }
  CHECK(best_pos == doctest::Approx(kPi).epsilon(0.05));
}

TEST_CASE("parity correlations") {
  PhasePoint origin(1);
  origin << Complex(0.0, 0.0);
  CHECK(parity_correlation(displaced_thermal(1.0, 0.0), origin) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Single-photon projector via a qubit register with only the |1><1| block.
  StateSum one;
  one.num_modes = 0;
  one.anchor = CVec::Zero(0);
  QubitBlocks blocks;
  GaussianDyadicTerm unit;
  unit.measure = GaussianMeasure::point_mass();
  blocks(1, 1).push_back(unit);
  one.qubit = blocks;
  PhasePoint o1(1);
  o1 << Complex(0.0, 0.0);
  CHECK(parity_correlation(one, o1) == doctest::Approx(-1.0).epsilon(1e-12));

  // Bounded on constructor states at random points.
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const StateSum& s :
       {thermal_superposition(3.0, 1.0, {kPi}, -1),
        thermal_superposition(5.0, 2.0, {kPi / 2.0}, +1)}) {
    const CompiledState cs = compile(s);
    for (int k = 0; k < 100; ++k) {
      PhasePoint p(1);
      p << Complex(u(rng), u(rng));
      CHECK(std::abs(parity_correlation(cs, p)) <= 1.0 + 1e-8);
    }
  }
}

TEST_CASE("CHSH combination at fixed settings") {
  const StateSum tm = two_mode_thermal_entangled(3.0, 1.0, +1);
  const CompiledState cs = compile(tm);

  // Degenerate settings: B = 2 E(a, b), bounded by 2.
  const Complex a(0.1, 0.2), b(-0.3, 0.1);
  const double B = bell_chsh(cs, a, a, b, b);
  PhasePoint p(2);
  p << a, b;
  CHECK(B == doctest::Approx(2.0 * parity_correlation(cs, p)).epsilon(1e-12));
  CHECK(std::abs(B) <= 2.0 + 1e-9);

  // Separable product of thermals satisfies |B| <= 2 at any settings.
  StateSum prod;
  prod.num_modes = 2;
  prod.anchor = CVec::Zero(2);
  GaussianDyadicTerm t;
  t.measure.dim = 2;
  t.measure.P = CMat::Identity(2, 2);  // V = 3 per mode
  t.measure.s = CVec::Zero(2);
  t.measure.t = CVec::Zero(2);
  t.measure.log_norm = 2.0 * std::log(2.0 / (kPi * 2.0));
  for (int m = 0; m < 2; ++m) {
    ModeDyadic mode;
    mode.ket = AffineAmplitude::variable(m, 2, 1.0, 0.0);
    mode.bra = mode.ket;
    t.modes.push_back(mode);
  }
  prod.terms.push_back(t);
  prod = normalize(prod);
  const CompiledState cp = compile(prod);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const double B2 = bell_chsh(cp, {u(rng), u(rng)}, {u(rng), u(rng)},
                                {u(rng), u(rng)}, {u(rng), u(rng)});
    CHECK(std::abs(B2) <= 2.0 + 1e-9);
  }
}

TEST_CASE("linear entropy") {
  CHECK(linear_entropy(displaced_thermal(3.0, 0.0)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(linear_entropy(displaced_thermal(10.0, 0.0)) ==
        doctest::Approx(0.9).epsilon(1e-10));
  CHECK(linear_entropy(pure_cat(1.3, +1)) == doctest::Approx(0.0).epsilon(1e-10));
}
