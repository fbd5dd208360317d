#include "thermcat/bell.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>

#include "thermcat/channels.hpp"
#include "thermcat/states.hpp"

namespace thermcat {

namespace {

// Characteristic scales read off the state itself: the lobe displacement D
// (largest coherent offset in the lab frame) and the sub-fringe settings
// scale 1/max(4D, sqrt(V)).  Bell-violating settings of cat-like states live
// at sub-fringe displacements near the origin.
struct Scales {
  double lobe = 0.0;
  double fringe = 1.0;
};

Scales characteristic_scales(const StateSum& state) {
  Scales s;
  double v_eff = 1.0;
  for (const auto& t : state.terms) {
    for (int m = 0; m < t.num_modes(); ++m) {
      s.lobe = std::max(s.lobe,
                        std::abs(t.modes[m].ket.offset + state.anchor(m)));
    }
    if (t.measure.dim > 0) {
      const double p = std::real(t.measure.P(0, 0));
      if (p > 0.0) v_eff = std::max(v_eff, 1.0 + 2.0 / p);
    }
  }
  s.fringe = 1.0 / std::max({4.0 * s.lobe, std::sqrt(v_eff), 1.0});
  return s;
}

// Pure-imaginary seed quadruples (multipliers of the fringe scale).  The
// leading entries sit on the classic CHSH geometry (0, 2chi, chi, -chi) that
// is optimal for cosine-like parity correlations; the rest vary magnitude
// and sign balance.
constexpr double kQuads[][4] = {
    {0.0, 1.6, -0.8, 0.8},    {0.0, -1.6, 0.8, -0.8},
    {0.0, 2.0, -1.0, 1.0},    {0.0, 1.0, -0.5, 0.5},
    {0.0, 0.5, -0.25, 0.25},  {0.0, 0.25, -0.125, 0.125},
    {0.0, 3.2, -1.6, 1.6},    {0.0, 1.6, 0.8, -0.8},
    {0.0, 1.0, 0.5, -0.5},    {0.0, 0.5, 0.25, -0.25},
    {0.8, -0.8, 0.8, -0.8},   {0.4, -0.4, 0.4, -0.4},
    {0.25, -0.25, 0.25, -0.25}, {1.0, -1.0, 1.0, -1.0},
    {1.0, -1.0, 0.5, -0.5},   {0.5, -0.5, 0.25, -0.25},
    {0.25, -0.25, 0.5, -0.5}, {0.5, -0.5, 1.0, -1.0},
    {2.0, -2.0, 1.0, -1.0},   {1.0, -2.0, 0.5, -1.5},
    {0.0, 1.0, 0.25, -0.75},  {0.0, 2.0, 0.5, -1.5},
    {0.0, 0.75, -0.4, 0.4},   {0.1, -0.1, 0.1, -0.1},
    {0.0, 0.1, -0.05, 0.05},  {0.0, 4.0, -2.0, 2.0},
    {0.0, 0.4, -0.2, 0.2},    {0.0, 0.0, 0.0, 0.0},
};
constexpr int kNumQuads = static_cast<int>(sizeof(kQuads) / sizeof(kQuads[0]));

std::vector<std::array<double, 8>> seed_list(const Scales& sc) {
  std::vector<std::array<double, 8>> seeds;
  // Two scale families widen the basin coverage.
  for (double scale : {sc.fringe, 4.0 * sc.fringe}) {
    for (int q = 0; q < kNumQuads; ++q) {
      std::array<double, 8> x{};
      for (int k = 0; k < 4; ++k) x[2 * k + 1] = kQuads[q][k] * scale;
      seeds.push_back(x);
    }
  }
  // Lobe-direction seeds (real components at 0, D/2, D).
  const double D = sc.lobe;
  const double f = sc.fringe;
  for (double rd : {0.5 * D, D}) {
    seeds.push_back({rd, 0.0, rd, 1.6 * f, rd, -0.8 * f, rd, 0.8 * f});
    seeds.push_back({-rd, 0.0, -rd, 1.6 * f, -rd, -0.8 * f, -rd, 0.8 * f});
    seeds.push_back({rd, 0.0, 0.0, 0.0, rd, 0.0, 0.0, 0.0});
    seeds.push_back({rd, 0.8 * f, rd, -0.8 * f, rd, 0.4 * f, rd, -0.4 * f});
  }
  return seeds;  // 64 restarts
}

struct Candidate {
  double value = -1.0;
  std::array<double, 8> x{};
  bool converged = false;
};

// Nelder-Mead on n of the 8 coordinates (all, or the imaginary ones only).
Candidate nelder_mead(const std::function<double(const std::array<double, 8>&)>& f,
                      const std::array<double, 8>& start,
                      const std::vector<int>& active, double step,
                      int max_evals, double tol) {
  const int n = static_cast<int>(active.size());
  struct Vertex {
    std::array<double, 8> x;
    double f;
  };
  int evals = 0;
  auto eval = [&](const std::array<double, 8>& x) {
    ++evals;
    return -f(x);  // minimize the negative
  };

  std::vector<Vertex> simplex;
  simplex.push_back({start, eval(start)});
  for (int i = 0; i < n; ++i) {
    std::array<double, 8> x = start;
    x[active[i]] += step;
    simplex.push_back({x, eval(x)});
  }

  bool converged = false;
  while (evals < max_evals) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (simplex.back().f - simplex.front().f < tol) {
      converged = true;
      break;
    }
    std::array<double, 8> centroid = simplex[0].x;
    for (int k : active) {
      double c = 0.0;
      for (int i = 0; i < n; ++i) c += simplex[i].x[k];
      centroid[k] = c / n;
    }
    auto blend = [&](double coef) {
      std::array<double, 8> x = centroid;
      for (int k : active) x[k] = centroid[k] + coef * (simplex[n].x[k] - centroid[k]);
      return x;
    };
    const auto xr = blend(-1.0);
    const double fr = eval(xr);
    if (fr < simplex[0].f) {
      const auto xe = blend(-2.0);
      const double fe = eval(xe);
      if (fe < fr)
        simplex[n] = {xe, fe};
      else
        simplex[n] = {xr, fr};
    } else if (fr < simplex[n - 1].f) {
      simplex[n] = {xr, fr};
    } else {
      const bool outside = fr < simplex[n].f;
      const auto xc = blend(outside ? -0.5 : 0.5);
      const double fc = eval(xc);
      if (fc < (outside ? fr : simplex[n].f)) {
        simplex[n] = {xc, fc};
      } else {
        for (int i = 1; i <= n; ++i) {
          for (int k : active)
            simplex[i].x[k] = 0.5 * (simplex[i].x[k] + simplex[0].x[k]);
          simplex[i].f = eval(simplex[i].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  return {-simplex[0].f, simplex[0].x, converged};
}

bool lex_less(const std::array<double, 8>& a, const std::array<double, 8>& b) {
  for (int i = 0; i < 8; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

BellResult maximize_bell(const StateSum& state, const BellOptions& opts) {
  if (state.num_modes != 2 || state.has_qubit())
    throw BadParameterError("maximize_bell needs a plain two-mode state");

  const CompiledState cs = compile(state);
  auto objective = [&cs](const std::array<double, 8>& x) {
    return std::abs(bell_chsh(cs, {x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]},
                              {x[6], x[7]}));
  };

  const Scales sc = characteristic_scales(state);
  const auto seeds = seed_list(sc);
  std::vector<int> active;
  if (opts.imaginary_only)
    active = {1, 3, 5, 7};
  else
    active = {0, 1, 2, 3, 4, 5, 6, 7};
  const double step = 0.5 * sc.fringe;

  std::vector<Candidate> results(seeds.size());
  const int threads = std::max(1, opts.threads);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= seeds.size()) break;
      results[i] = nelder_mead(objective, seeds[i], active, step,
                               opts.max_evals, opts.tol);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (int t = 0; t < threads; ++t)
      pool.push_back(std::async(std::launch::async, worker));
    for (auto& fut : pool) fut.get();
  }

  // Deterministic reduction regardless of scheduling.
  Candidate best;
  for (const auto& c : results) {
    if (c.value > best.value ||
        (c.value == best.value && lex_less(c.x, best.x)))
      best = c;
  }

  BellResult out;
  out.b_max = best.value;
  out.settings = {Complex{best.x[0], best.x[1]}, Complex{best.x[2], best.x[3]},
                  Complex{best.x[4], best.x[5]}, Complex{best.x[6], best.x[7]}};
  out.restarts_used = static_cast<int>(seeds.size());
  out.converged = best.converged;
  return out;
}

std::vector<BellScanRow> bell_curve_vs_d(double V,
                                         const std::vector<double>& d_list,
                                         int sign, const BellOptions& opts) {
  std::vector<BellScanRow> rows;
  for (double d : d_list) {
    BellScanRow row;
    row.parameter = d;
    row.result = maximize_bell(two_mode_thermal_entangled(V, d, sign), opts);
    rows.push_back(row);
  }
  return rows;
}

std::vector<BellScanRow> bell_curve_vs_V_split(const std::vector<double>& V_list,
                                               double d, int sign,
                                               const BellOptions& opts) {
  std::vector<BellScanRow> rows;
  for (double V : V_list) {
    // V = 1 at d = 0 is the degenerate vacuum branch (the + outcome leaves
    // the vacuum unchanged); excluded from the scan.
    if (V == 1.0 && d == 0.0) continue;
    BellScanRow row;
    row.parameter = V;
    row.result = maximize_bell(
        bs_split_superposition(V, d, KerrInteractionSpec{kPi}, sign), opts);
    rows.push_back(row);
  }
  return rows;
}

double survival_time(const std::function<StateSum(double)>& lossy_state,
                     const BellOptions& opts, double tol_gamma_t) {
  auto b_at = [&](double gt) { return maximize_bell(lossy_state(gt), opts).b_max; };

  if (b_at(0.0) <= 2.0 + 1e-9)
    throw NoViolationError("survival_time: no violation at gamma_t = 0");

  // Coarse forward scan brackets the first crossing even if the curve is not
  // strictly monotone; bisection then sharpens it.
  double lo = 0.0, hi = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double gt = 0.05 * k;
    if (b_at(gt) <= 2.0) {
      hi = gt;
      break;
    }
    lo = gt;
  }
  if (hi == 0.0)
    throw NoViolationError("survival_time: violation persists up to gamma_t = 1");

  while (hi - lo > tol_gamma_t) {
    const double mid = 0.5 * (lo + hi);
    if (b_at(mid) > 2.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace thermcat
