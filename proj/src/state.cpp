#include "thermcat/state.hpp"

#include <cmath>
#include <vector>

namespace thermcat {

namespace {

Complex sum_traces(const std::vector<GaussianDyadicTerm>& terms) {
  Complex total = 0.0;
  for (const auto& t : terms) total += std::exp(log_trace(t));
  return total;
}

void scale_terms(std::vector<GaussianDyadicTerm>& terms, Complex log_scale) {
  for (auto& t : terms) t.log_weight += log_scale;
}

}  // namespace

void verify_hermitian_pairing(const StateSum& state, double tol) {
  auto check_pairing = [&](const std::vector<GaussianDyadicTerm>& fwd,
                           const std::vector<GaussianDyadicTerm>& bwd) {
    std::vector<bool> used(bwd.size(), false);
    for (const auto& term : fwd) {
      const GaussianDyadicTerm adj = adjoint(term);
      bool found = false;
      for (size_t k = 0; k < bwd.size(); ++k) {
        if (!used[k] && terms_match(adj, bwd[k], tol)) {
          used[k] = true;
          found = true;
          break;
        }
      }
      if (!found)
        throw ImaginaryResidualError(
            "state is not Hermitian: missing adjoint partner for a term");
    }
  };

  if (state.has_qubit()) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        check_pairing((*state.qubit)(i, j), (*state.qubit)(j, i));
  } else {
    check_pairing(state.terms, state.terms);
  }
}

double trace(const StateSum& state) {
  Complex total = 0.0;
  if (state.has_qubit()) {
    total = sum_traces((*state.qubit)(0, 0)) + sum_traces((*state.qubit)(1, 1));
  } else {
    total = sum_traces(state.terms);
  }
  if (std::abs(total.imag()) > 1e-10 * std::abs(total.real()) + 1e-12)
    throw ImaginaryResidualError("trace has a non-real residual");
  return total.real();
}

StateSum normalize(const StateSum& state) {
  const double tr = trace(state);
  if (std::abs(tr) < 1e-300) throw ZeroTraceError("state has zero trace");
  StateSum out = state;
  const Complex log_scale = -std::log(Complex(tr, 0.0));
  if (out.has_qubit()) {
    for (auto& block : out.qubit->blocks) scale_terms(block, log_scale);
  } else {
    scale_terms(out.terms, log_scale);
  }
  out.norm_status = NormStatus::normalized;
  out.norm_constant = tr;
  return out;
}

StateSum trace_out_qubit(const StateSum& state) {
  if (!state.has_qubit())
    throw BadParameterError("trace_out_qubit: state has no qubit register");
  StateSum out;
  out.num_modes = state.num_modes;
  out.anchor = state.anchor;
  out.norm_status = state.norm_status;
  out.norm_constant = state.norm_constant;
  out.terms = (*state.qubit)(0, 0);
  const auto& b11 = (*state.qubit)(1, 1);
  out.terms.insert(out.terms.end(), b11.begin(), b11.end());
  return out;
}

StateSum partial_trace(const StateSum& state, int mode) {
  if (mode < 0 || mode >= state.num_modes)
    throw BadParameterError("partial_trace: bad mode index");
  StateSum out = state;
  out.num_modes = state.num_modes - 1;
  CVec anchor(out.num_modes);
  int k = 0;
  for (int m = 0; m < state.num_modes; ++m)
    if (m != mode) anchor(k++) = state.anchor(m);
  out.anchor = anchor;
  auto strip = [&](std::vector<GaussianDyadicTerm>& terms) {
    for (auto& t : terms) t = partial_trace_mode(t, mode);
  };
  if (out.has_qubit()) {
    for (auto& block : out.qubit->blocks) strip(block);
  } else {
    strip(out.terms);
  }
  return out;
}

}  // namespace thermcat
