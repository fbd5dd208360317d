#include "thermcat/wigner.hpp"

#include <cmath>

namespace thermcat {

Complex coherent_dyadic_wigner_kernel(Complex mu, Complex nu, Complex beta) {
  const Complex nub = std::conj(nu);
  const Complex expo = -2.0 * (beta - mu) * (std::conj(beta) - nub) +
                       mu * nub - 0.5 * std::norm(mu) - 0.5 * std::norm(nu);
  return (2.0 / kPi) * std::exp(expo);
}

WignerGaussianTerm compile_term(const GaussianDyadicTerm& term) {
  const int M = term.num_modes();
  const int r = term.measure.dim;

  // Collect the z-exponent produced by the product of per-mode kernels.
  CMat P_eff = term.measure.P;
  CVec s0 = term.measure.s;
  CVec t0 = term.measure.t;
  CMat Us = CMat::Zero(r, M);  // column m: 2 u_m   (beta_m-bar coupling)
  CMat Vt = CMat::Zero(r, M);  // column m: 2 conj(v_m)
  Complex const_part = 0.0;

  for (int m = 0; m < M; ++m) {
    const CVec& u = term.modes[m].ket.coeff;
    const CVec& v = term.modes[m].bra.coeff;
    const Complex a = term.modes[m].ket.offset;
    const Complex b = term.modes[m].bra.offset;

    P_eff += 0.5 * (u.conjugate() * u.transpose() + v.conjugate() * v.transpose()) +
             v.conjugate() * u.transpose();
    s0 += -u * (std::conj(b) + 0.5 * std::conj(a)) - 0.5 * v * std::conj(b);
    t0 += -v.conjugate() * (a + 0.5 * b) - 0.5 * u.conjugate() * a;
    Us.col(m) = 2.0 * u;
    Vt.col(m) = 2.0 * v.conjugate();
    // -mu nubar - |mu|^2/2 - |nu|^2/2 constant piece, cancellation-free form.
    const Complex sum = a + b;
    const_part += -0.5 * sum * std::conj(sum) - kI * std::imag(a * std::conj(b));
  }

  WignerGaussianTerm out;
  out.num_modes = M;
  out.log_coeff = term.log_weight + term.measure.log_norm + const_part +
                  static_cast<double>(M) * std::log(2.0 / kPi);

  // Linear part from the kernel's 2 beta conj(nu) and 2 conj(beta) mu pieces.
  CVec lin = CVec::Zero(M);
  CVec lin_bar = CVec::Zero(M);
  for (int m = 0; m < M; ++m) {
    lin(m) = 2.0 * std::conj(term.modes[m].bra.offset);
    lin_bar(m) = 2.0 * term.modes[m].ket.offset;
  }

  if (r == 0) {
    out.quad = -2.0 * CMat::Identity(M, M);
    out.lin = lin;
    out.lin_bar = lin_bar;
    return out;
  }

  CMat herm = 0.5 * (P_eff + P_eff.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(herm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw NonConvergentError("compile_term: measure integral diverges");

  Eigen::PartialPivLU<CMat> lu(P_eff);
  Complex log_det = 0.0;
  for (int i = 0; i < r; ++i) log_det += std::log(lu.matrixLU()(i, i));
  if (lu.permutationP().determinant() < 0) log_det += Complex(0.0, kPi);

  const CMat Q = lu.inverse();
  out.quad = Us.transpose() * Q * Vt - 2.0 * CMat::Identity(M, M);
  out.lin = lin + Vt.transpose() * Q.transpose() * s0;
  out.lin_bar = lin_bar + Us.transpose() * Q * t0;
  out.log_coeff += static_cast<double>(r) * std::log(kPi) - log_det +
                   (s0.transpose() * Q * t0)(0, 0);
  return out;
}

Complex eval_term(const WignerGaussianTerm& term, const CVec& beta) {
  const Complex quad = (beta.adjoint() * term.quad * beta)(0, 0);
  const Complex lin = (term.lin.transpose() * beta)(0, 0) +
                      (term.lin_bar.transpose() * beta.conjugate())(0, 0);
  return std::exp(term.log_coeff + quad + lin);
}

Complex qubit_kernel(int i, int j, Complex alpha) {
  const double g = (2.0 / kPi) * std::exp(-2.0 * std::norm(alpha));
  if (i == 0 && j == 0) return g;
  if (i == 1 && j == 1) return g * (4.0 * std::norm(alpha) - 1.0);
  if (i == 1 && j == 0) return g * 2.0 * alpha;
  return g * 2.0 * std::conj(alpha);
}

CompiledState compile(const StateSum& state) {
  CompiledState out;
  out.num_modes = state.num_modes;
  out.with_qubit = state.has_qubit();
  out.anchor = state.anchor;
  if (state.has_qubit()) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (const auto& t : (*state.qubit)(i, j))
          out.qubit_blocks[2 * i + j].push_back(compile_term(t));
  } else {
    out.terms.reserve(state.terms.size());
    for (const auto& t : state.terms) out.terms.push_back(compile_term(t));
  }
  return out;
}

Complex wigner_complex(const CompiledState& state, const PhasePoint& point) {
  const int offset = state.with_qubit ? 1 : 0;
  if (point.size() != state.num_modes + offset)
    throw BadParameterError("wigner: phase point has wrong dimension");
  CVec beta(state.num_modes);
  for (int m = 0; m < state.num_modes; ++m)
    beta(m) = point(m + offset) - state.anchor(m);

  Complex total = 0.0;
  if (state.with_qubit) {
    const Complex alpha = point(0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const auto& block = state.qubit_blocks[2 * i + j];
        if (block.empty()) continue;
        Complex osc = 0.0;
        for (const auto& t : block) osc += eval_term(t, beta);
        total += qubit_kernel(i, j, alpha) * osc;
      }
  } else {
    for (const auto& t : state.terms) total += eval_term(t, beta);
  }
  return total;
}

double wigner(const CompiledState& state, const PhasePoint& point) {
  const Complex w = wigner_complex(state, point);
  if (std::abs(w.imag()) > 1e-9 * std::abs(w.real()) + 1e-12)
    throw ImaginaryResidualError("wigner value has a non-real residual");
  return w.real();
}

double wigner(const StateSum& state, const PhasePoint& point) {
  return wigner(compile(state), point);
}

WignerGaussianTerm reduce_to_mode(const WignerGaussianTerm& term, int keep) {
  const int M = term.num_modes;
  if (keep < 0 || keep >= M) throw BadParameterError("reduce_to_mode: bad mode");
  if (M == 1) return term;

  std::vector<int> rest;
  for (int m = 0; m < M; ++m)
    if (m != keep) rest.push_back(m);
  const int R = static_cast<int>(rest.size());

  CMat Mrr(R, R);
  CVec m_kr(R), m_rk(R), c_r(R), d_r(R);
  for (int i = 0; i < R; ++i) {
    m_kr(i) = term.quad(keep, rest[i]);
    m_rk(i) = term.quad(rest[i], keep);
    c_r(i) = term.lin(rest[i]);
    d_r(i) = term.lin_bar(rest[i]);
    for (int j = 0; j < R; ++j) Mrr(i, j) = term.quad(rest[i], rest[j]);
  }

  const CMat P = -Mrr;
  CMat herm = 0.5 * (P + P.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(herm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw NonConvergentError("reduce_to_mode: mode integral diverges");

  Eigen::PartialPivLU<CMat> lu(P);
  Complex log_det = 0.0;
  for (int i = 0; i < R; ++i) log_det += std::log(lu.matrixLU()(i, i));
  if (lu.permutationP().determinant() < 0) log_det += Complex(0.0, kPi);
  const CMat W = lu.inverse();

  WignerGaussianTerm out;
  out.num_modes = 1;
  out.quad = CMat::Constant(1, 1, term.quad(keep, keep) +
                                     (m_kr.transpose() * W * m_rk)(0, 0));
  out.lin = CVec::Constant(1, term.lin(keep) + (c_r.transpose() * W * m_rk)(0, 0));
  out.lin_bar = CVec::Constant(
      1, term.lin_bar(keep) + (m_kr.transpose() * W * d_r)(0, 0));
  out.log_coeff = term.log_coeff + static_cast<double>(R) * std::log(kPi) -
                  log_det + (c_r.transpose() * W * d_r)(0, 0);
  return out;
}

Complex log_integral(const WignerGaussianTerm& term) {
  return term.log_coeff +
         gaussian_log_integral(-term.quad, term.lin, term.lin_bar);
}

}  // namespace thermcat
