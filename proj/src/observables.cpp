#include "thermcat/observables.hpp"

#include <algorithm>
#include <cmath>

#include "thermcat/channels.hpp"

namespace thermcat {

namespace {

// One reduced 1D Gaussian: density contribution
//   Re exp(log_c + q x^2 + lin x)  at x = coordinate - shift.
struct ReducedTerm {
  Complex q;
  Complex lin;
  Complex log_c;
};

struct MarginalPlan {
  std::vector<ReducedTerm> reduced;
  double shift = 0.0;   // anchor offset along the kept axis
  double lo = 0.0, hi = 0.0;
  double min_period = 0.0;  // 0 when no oscillatory term
  double min_width = 0.0;
};

MarginalPlan plan_marginal(const StateSum& state, int mode, double theta) {
  if (state.has_qubit())
    throw BadParameterError("marginal: trace out the qubit register first");
  if (mode < 0 || mode >= state.num_modes)
    throw BadParameterError("marginal: bad mode index");

  const StateSum rotated =
      theta == 0.0 ? state : phase_rotate(state, mode, -theta);
  const CompiledState cs = compile(rotated);

  MarginalPlan plan;
  plan.shift = cs.anchor(mode).real();

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double min_period = std::numeric_limits<double>::infinity();
  double min_width = min_period;

  for (const auto& full : cs.terms) {
    const WignerGaussianTerm t = reduce_to_mode(full, mode);
    const Complex q = t.quad(0, 0);
    const Complex c = t.lin(0);
    const Complex d = t.lin_bar(0);
    if (q.real() >= 0.0)
      throw NonConvergentError("marginal: reduced Gaussian does not decay");

    ReducedTerm r;
    r.q = q;
    r.lin = c + d;
    // Integral over p of exp(q p^2 + i(c-d)p) = sqrt(pi/(-q)) e^{(c-d)^2/(4q)}.
    const Complex cd = c - d;
    r.log_c = t.log_coeff + 0.5 * (std::log(kPi) - std::log(-q)) +
              cd * cd / (4.0 * q);
    plan.reduced.push_back(r);

    const double center = -0.5 * r.lin.real() / q.real();
    const double width = std::sqrt(-0.5 / q.real());
    lo = std::min(lo, center - 9.0 * width);
    hi = std::max(hi, center + 9.0 * width);
    min_width = std::min(min_width, width);
    const double k = std::abs(r.lin.imag());
    if (k * width > 1.0) min_period = std::min(min_period, 2.0 * kPi / k);
  }

  plan.lo = plan.shift + lo;
  plan.hi = plan.shift + hi;
  plan.min_width = min_width;
  plan.min_period = std::isfinite(min_period) ? min_period : 0.0;
  return plan;
}

double eval_plan(const MarginalPlan& plan, double x) {
  const double xc = x - plan.shift;
  Complex total = 0.0;
  for (const auto& r : plan.reduced)
    total += std::exp(r.log_c + r.q * xc * xc + r.lin * xc);
  return total.real();
}

std::vector<int> local_maxima(const std::vector<double>& y, double floor) {
  std::vector<int> idx;
  for (size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] >= y[i + 1] && y[i] > floor)
      idx.push_back(static_cast<int>(i));
  return idx;
}

}  // namespace

MarginalCurve marginal(const StateSum& state, int mode, double theta,
                       const MarginalOptions& opts) {
  const MarginalPlan plan = plan_marginal(state, mode, theta);

  double lo = plan.lo, hi = plan.hi;
  if (opts.window) {
    lo = opts.window->first;
    hi = opts.window->second;
  }
  int samples;
  if (opts.samples) {
    samples = *opts.samples;
    if (samples < 3) throw BadParameterError("marginal: need >= 3 samples");
  } else {
    double step = plan.min_width / 48.0;
    if (plan.min_period > 0.0)
      step = std::min(step, plan.min_period / opts.fringe_oversample);
    samples = static_cast<int>(std::ceil((hi - lo) / step)) + 1;
    samples = std::clamp(samples, 401, 3000001);
  }
  if (samples % 2 == 0) ++samples;

  MarginalCurve curve;
  curve.theta = theta;
  curve.mode = mode;
  curve.coordinate.resize(samples);
  curve.density.resize(samples);
  const double step = (hi - lo) / (samples - 1);
  double peak = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = lo + i * step;
    const double f = eval_plan(plan, x);
    curve.coordinate[i] = x;
    curve.density[i] = f;
    peak = std::max(peak, std::abs(f));
  }
  for (double f : curve.density)
    if (f < -1e-6 * peak)
      throw StateCorruptionError("marginal: density went negative");
  return curve;
}

double integrate(const MarginalCurve& curve) {
  double total = 0.0;
  for (size_t i = 1; i < curve.coordinate.size(); ++i)
    total += 0.5 * (curve.density[i] + curve.density[i - 1]) *
             (curve.coordinate[i] - curve.coordinate[i - 1]);
  return total;
}

VisibilityResult visibility(const StateSum& state, int mode, double theta,
                            const MarginalOptions& opts) {
  const MarginalPlan plan = plan_marginal(state, mode, theta);
  if (opts.samples && plan.min_period > 0.0) {
    const double lo = opts.window ? opts.window->first : plan.lo;
    const double hi = opts.window ? opts.window->second : plan.hi;
    if ((hi - lo) / (*opts.samples - 1) > plan.min_period / 40.0)
      throw ResolutionTooCoarseError(
          "visibility: grid cannot resolve the fringe period");
  }
  const MarginalCurve curve = marginal(state, mode, theta, opts);
  const auto& y = curve.density;

  const int n = static_cast<int>(y.size());
  int gmax = 0;
  for (int i = 1; i < n; ++i)
    if (y[i] > y[gmax]) gmax = i;

  const std::vector<int> maxima = local_maxima(y, 1e-9 * y[gmax]);
  VisibilityResult out;
  out.i_max = y[gmax];
  out.x_max = curve.coordinate[gmax];

  // Nearest local maxima on either side of the global one.
  int left = -1, right = -1;
  for (int m : maxima) {
    if (m < gmax) left = m;
    if (m > gmax) {
      right = m;
      break;
    }
  }
  if (left < 0 && right < 0) {
    out.v = 0.0;  // unimodal: no fringes by convention
    return out;
  }
  double vmin = std::numeric_limits<double>::infinity();
  double xmin = curve.coordinate[gmax];
  auto scan = [&](int a, int b) {
    for (int i = a; i <= b; ++i)
      if (y[i] < vmin) {
        vmin = y[i];
        xmin = curve.coordinate[i];
      }
  };
  if (left >= 0) scan(left, gmax);
  if (right >= 0) scan(gmax, right);
  out.i_min = vmin;
  out.x_min = xmin;
  out.v = (out.i_max - out.i_min) / (out.i_max + out.i_min);
  return out;
}

double fringe_spacing(const StateSum& state, int mode, double theta,
                      const MarginalOptions& opts) {
  const MarginalPlan plan = plan_marginal(state, mode, theta);
  const MarginalCurve curve = marginal(state, mode, theta, opts);
  const auto& y = curve.density;
  const int n = static_cast<int>(y.size());
  const double peak = *std::max_element(y.begin(), y.end());

  // Fringe maxima selected by prominence (height above the nearest valleys),
  // so ripples riding a broad pedestal count while roundoff noise does not.
  std::vector<double> pos;
  for (int i : local_maxima(y, 0.0)) {
    double left = y[i], right = y[i];
    for (int k = i - 1; k >= 0 && y[k] <= y[k + 1]; --k) left = y[k];
    for (int k = i + 1; k < n && y[k] <= y[k - 1]; ++k) right = y[k];
    if (y[i] - std::max(left, right) >= 1e-6 * peak)
      pos.push_back(curve.coordinate[i]);
  }
  if (pos.size() < 3)
    throw NoFringesError("fringe_spacing: fewer than three fringe maxima");
  double t_raw = 0.0;
  for (size_t i = 1; i < pos.size(); ++i) t_raw += pos[i] - pos[i - 1];
  t_raw /= static_cast<double>(pos.size() - 1);

  // Raw maxima spacings are biased by the envelope gradient (relative shift
  // ~V/(4 d^2) for the thermal interference term), so the period is read off
  // the spectral peak of the oscillatory component alone, seeded by t_raw.
  std::vector<const ReducedTerm*> osc;
  double k_ref = 0.0, width = 0.0, center = 0.0;
  for (const auto& r : plan.reduced) {
    const double k = std::abs(r.lin.imag());
    const double w = std::sqrt(-0.5 / r.q.real());
    if (k * w > 1.0 && k > k_ref) {
      k_ref = k;
      width = w;
      center = plan.shift - 0.5 * r.lin.real() / r.q.real();
    }
  }
  for (const auto& r : plan.reduced)
    if (std::abs(r.lin.imag()) > 0.5 * k_ref) osc.push_back(&r);
  if (osc.empty() || k_ref == 0.0) return t_raw;

  const double L = std::max(10.0 * width, 6.0 * t_raw);
  const double step = t_raw / 64.0;
  const int half = static_cast<int>(std::ceil(L / step));
  std::vector<double> xs, fs;
  for (int i = -half; i <= half; ++i) {
    const double x = center + i * step;
    const double xc = x - plan.shift;
    Complex v = 0.0;
    for (const ReducedTerm* r : osc)
      v += std::exp(r->log_c + r->q * xc * xc + r->lin * xc);
    const double hann = 0.5 * (1.0 + std::cos(kPi * i / half));
    xs.push_back(x - center);
    fs.push_back(hann * v.real());
  }
  auto amplitude = [&](double k) {
    Complex acc = 0.0;
    for (size_t i = 0; i < xs.size(); ++i)
      acc += fs[i] * std::exp(Complex(0.0, -k * xs[i]));
    return std::abs(acc);
  };
  const double k0 = 2.0 * kPi / t_raw;
  double a = 0.85 * k0, b = 1.15 * k0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = amplitude(c1), f2 = amplitude(c2);
  for (int it = 0; it < 120; ++it) {
    if (f1 > f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = amplitude(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = amplitude(c2);
    }
  }
  return 2.0 * kPi / (0.5 * (a + b));
}

double parity_correlation(const CompiledState& state, const PhasePoint& point) {
  const int dims = state.num_modes + (state.with_qubit ? 1 : 0);
  const double e = std::pow(0.5 * kPi, dims) * wigner(state, point);
  if (std::abs(e) > 1.0 + 1e-8)
    throw StateCorruptionError("parity correlation out of [-1, 1]");
  return e;
}

double parity_correlation(const StateSum& state, const PhasePoint& point) {
  return parity_correlation(compile(state), point);
}

double bell_chsh(const CompiledState& state, Complex a, Complex a2, Complex b,
                 Complex b2) {
  if (state.num_modes != 2 || state.with_qubit)
    throw BadParameterError("bell_chsh needs a plain two-mode state");
  auto w = [&](Complex x, Complex y) {
    PhasePoint p(2);
    p << x, y;
    return wigner(state, p);
  };
  return 0.25 * kPi * kPi * (w(a, b) + w(a, b2) + w(a2, b) - w(a2, b2));
}

double bell_chsh(const StateSum& state, Complex a, Complex a2, Complex b,
                 Complex b2) {
  return bell_chsh(compile(state), a, a2, b, b2);
}

double linear_entropy(const StateSum& state) { return 1.0 - purity(state); }

}  // namespace thermcat
