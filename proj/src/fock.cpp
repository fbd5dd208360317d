#include "thermcat/fock.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace thermcat::fock {

namespace {

constexpr int kMaxCutoff = 400;

CVec coherent_vector(Complex alpha, int cutoff) {
  CVec v(cutoff + 1);
  // c_n = e^{-|a|^2/2} a^n / sqrt(n!)
  Complex c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n <= cutoff; ++n) {
    v(n) = c;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return v;
}

CMat parity_matrix(int cutoff) {
  CMat p = CMat::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return p;
}

// Tr[rho (A (x) B)] for a two-mode density matrix, via per-block traces.
Complex trace_two_mode(const CMat& rho, const CMat& A, const CMat& B,
                       int dim) {
  CMat T(dim, dim);
  const CMat Bt = B.transpose();
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k)
      T(i, k) = (rho.block(i * dim, k * dim, dim, dim).array() * Bt.array()).sum();
  return (A * T).trace();
}

double tail_of(const CMat& rho, int dim, int modes) {
  double trace = 0.0;
  for (int i = 0; i < rho.rows(); ++i) trace += rho(i, i).real();
  double edge = 0.0;
  if (modes == 1) {
    for (int n = std::max(0, dim - 3); n < dim; ++n) edge += std::abs(rho(n, n));
  } else {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i >= dim - 3 || j >= dim - 3)
          edge += std::abs(rho(i * dim + j, i * dim + j));
  }
  return std::abs(1.0 - trace) + edge;
}

}  // namespace

int cutoff_selector(double V, double d, double beta_max, double epsilon) {
  if (V < 1.0) throw BadVarianceError("cutoff_selector needs V >= 1");
  const double nbar = 0.5 * (V - 1.0);
  const double D = std::abs(d) + std::abs(beta_max);
  const double D2 = D * D;

  if (nbar == 0.0) {
    // Poisson tail.
    double term = std::exp(-D2), cum = term;
    for (int n = 1; n <= kMaxCutoff; ++n) {
      term *= D2 / n;
      cum += term;
      if (1.0 - cum < epsilon && term < epsilon) return n;
    }
    return kMaxCutoff;
  }

  // Displaced-thermal photon distribution (Laguerre form), with the q^n
  // geometric factor folded into the recurrence to avoid overflow:
  //   P(n) = q^n/(nbar+1) e^{-D^2/(nbar+1)} L_n(x),
  //   q = nbar/(nbar+1),  x = -D^2/(nbar(nbar+1)).
  const double q = nbar / (nbar + 1.0);
  const double x = -D2 / (nbar * (nbar + 1.0));
  const double pref = std::exp(-D2 / (nbar + 1.0)) / (nbar + 1.0);

  double t_prev = 1.0;            // q^0 L_0
  double t_cur = q * (1.0 - x);   // q^1 L_1
  double cum = pref * t_prev + pref * t_cur;
  for (int n = 1; n < kMaxCutoff; ++n) {
    const double t_next =
        (q * (2.0 * n + 1.0 - x) * t_cur - q * q * n * t_prev) / (n + 1.0);
    t_prev = t_cur;
    t_cur = t_next;
    cum += pref * t_cur;
    if (1.0 - cum < epsilon && pref * t_cur < epsilon) return n + 1;
  }
  return kMaxCutoff;
}

CMat displacement_operator(int cutoff, Complex alpha) {
  const int dim = cutoff + 1;
  if (alpha == Complex(0.0, 0.0)) return CMat::Identity(dim, dim);
  const int pad = static_cast<int>(std::ceil(1.25 * dim)) + 8;
  CMat gen = CMat::Zero(pad, pad);
  for (int n = 0; n + 1 < pad; ++n) {
    const double root = std::sqrt(static_cast<double>(n + 1));
    gen(n + 1, n) = alpha * root;              // a^dag
    gen(n, n + 1) = -std::conj(alpha) * root;  // -conj(alpha) a
  }
  const CMat U = gen.exp();
  return U.topLeftCorner(dim, dim);
}

FockOperator vacuum(int cutoff) {
  FockOperator out;
  out.cutoff = cutoff;
  out.modes = 1;
  out.matrix = CMat::Zero(cutoff + 1, cutoff + 1);
  out.matrix(0, 0) = 1.0;
  return out;
}

FockOperator coherent_projector(Complex alpha, int cutoff) {
  FockOperator out;
  out.cutoff = cutoff;
  out.modes = 1;
  const CVec v = coherent_vector(alpha, cutoff);
  out.matrix = v * v.adjoint();
  out.tail_mass = tail_of(out.matrix, cutoff + 1, 1);
  return out;
}

FockOperator fock_thermal(double V, double d, int cutoff) {
  if (V < 1.0) throw BadVarianceError("fock_thermal needs V >= 1");
  const int dim = cutoff + 1;
  const double nbar = 0.5 * (V - 1.0);
  CMat rho = CMat::Zero(dim, dim);
  if (nbar == 0.0) {
    rho(0, 0) = 1.0;
  } else {
    const double q = nbar / (nbar + 1.0);
    double p = 1.0 / (nbar + 1.0);
    for (int n = 0; n < dim; ++n) {
      rho(n, n) = p;
      p *= q;
    }
  }
  if (d != 0.0) {
    const CMat D = displacement_operator(cutoff, d);
    rho = D * rho * D.adjoint();
  }
  FockOperator out;
  out.cutoff = cutoff;
  out.modes = 1;
  out.matrix = rho;
  out.tail_mass = tail_of(rho, dim, 1);
  if (out.tail_mass > 1e-8)
    throw CutoffTooSmallError("fock_thermal: occupation tail too large");
  return out;
}

FockOperator projector_states(double V, double d, double phi, int sign,
                              int cutoff, double* raw_trace) {
  if (sign != 1 && sign != -1) throw BadParameterError("sign must be +-1");
  const FockOperator th = fock_thermal(V, d, cutoff);
  const int dim = cutoff + 1;
  // (1 +- U) rho (1 +- U)^dag with U = diag(e^{i phi n}): elementwise.
  CVec proj(dim);
  for (int n = 0; n < dim; ++n)
    proj(n) = 1.0 + static_cast<double>(sign) * std::exp(kI * (phi * n));
  CMat raw = proj.asDiagonal() * th.matrix * proj.conjugate().asDiagonal();
  const double tr = raw.trace().real();
  if (raw_trace) *raw_trace = tr;
  if (std::abs(tr) < 1e-14)
    throw ZeroTraceError("projector_states: branch has zero trace");
  FockOperator out;
  out.cutoff = cutoff;
  out.modes = 1;
  out.matrix = raw / tr;
  out.tail_mass = tail_of(out.matrix, dim, 1);
  return out;
}

FockOperator two_mode_entangled(double V, double d, int sign, int cutoff) {
  if (sign != 1 && sign != -1) throw BadParameterError("sign must be +-1");
  const FockOperator th = fock_thermal(V, d, cutoff);
  FockOperator joint = tensor(th, th);
  const int dim = cutoff + 1;
  // (1 +- Pi (x) Pi) rho (same): the projector is diagonal (+-1 entries).
  CVec proj(dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      proj(i * dim + j) =
          1.0 + static_cast<double>(sign) * (((i + j) % 2 == 0) ? 1.0 : -1.0);
  joint.matrix = proj.asDiagonal() * joint.matrix * proj.asDiagonal();
  const double tr = joint.matrix.trace().real();
  if (std::abs(tr) < 1e-14)
    throw ZeroTraceError("two_mode_entangled: zero trace");
  joint.matrix /= tr;
  joint.tail_mass = tail_of(joint.matrix, dim, 2);
  return joint;
}

FockOperator cat_state(Complex alpha, int sign, int cutoff) {
  if (sign != 1 && sign != -1) throw BadParameterError("sign must be +-1");
  const CVec plus = coherent_vector(alpha, cutoff);
  const CVec minus = coherent_vector(-alpha, cutoff);
  const CVec psi = plus + static_cast<double>(sign) * minus;
  const double norm2 = psi.squaredNorm();
  if (norm2 < 1e-14) throw ZeroTraceError("cat_state: zero norm");
  FockOperator out;
  out.cutoff = cutoff;
  out.modes = 1;
  out.matrix = (psi * psi.adjoint()) / norm2;
  out.tail_mass = tail_of(out.matrix, cutoff + 1, 1);
  return out;
}

FockOperator tensor(const FockOperator& a, const FockOperator& b) {
  if (a.modes != 1 || b.modes != 1 || a.cutoff != b.cutoff)
    throw BadParameterError("tensor: needs two single-mode operators, same cutoff");
  FockOperator out;
  out.cutoff = a.cutoff;
  out.modes = 2;
  out.matrix = Eigen::kroneckerProduct(a.matrix, b.matrix);
  out.tail_mass = a.tail_mass + b.tail_mass;
  return out;
}

FockOperator apply_bs(const FockOperator& rho, double transmittance) {
  if (rho.modes != 2) throw BadParameterError("apply_bs: needs two modes");
  if (transmittance < 0.0 || transmittance > 1.0)
    throw BadTransmittanceError("apply_bs: transmittance outside [0,1]");
  const int dim = rho.dim();
  const double theta = std::acos(std::sqrt(transmittance));

  // Build U sector by sector: the generator theta (a^dag b - a b^dag)
  // conserves total photon number, and every sector s <= N is complete.
  Eigen::SparseMatrix<Complex> U(dim * dim, dim * dim);
  std::vector<Eigen::Triplet<Complex>> entries;
  for (int s = 0; s <= 2 * rho.cutoff; ++s) {
    const int lo = std::max(0, s - rho.cutoff);
    const int hi = std::min(s, rho.cutoff);
    const int size = hi - lo + 1;
    CMat gen = CMat::Zero(size, size);
    for (int i = 0; i + 1 < size; ++i) {
      const int n1 = lo + i;        // photons in mode 0
      const int n2 = s - n1;        // photons in mode 1
      // <n1+1, n2-1| a^dag b |n1, n2> = sqrt((n1+1) n2)
      const double amp = theta * std::sqrt(static_cast<double>((n1 + 1) * n2));
      gen(i + 1, i) = amp;
      gen(i, i + 1) = -amp;
    }
    const CMat Us = gen.exp();
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        const int row = (lo + i) * dim + (s - lo - i);
        const int col = (lo + j) * dim + (s - lo - j);
        entries.emplace_back(row, col, Us(i, j));
      }
  }
  U.setFromTriplets(entries.begin(), entries.end());
  FockOperator out = rho;
  const CMat half = U * rho.matrix;
  out.matrix = half * U.adjoint();
  out.tail_mass = tail_of(out.matrix, dim, 2);
  return out;
}

FockOperator apply_loss(const FockOperator& rho, int mode, double gamma_t) {
  if (gamma_t < 0.0) throw NegativeTimeError("apply_loss: gamma_t < 0");
  if (mode < 0 || mode >= rho.modes) throw BadParameterError("apply_loss: bad mode");
  if (gamma_t == 0.0) return rho;
  const int dim = rho.dim();
  const double eta = std::exp(-gamma_t);

  // Kraus ladder K_k[n, n+k] = sqrt(C(n+k, k) eta^n (1-eta)^k); only the
  // k-th superdiagonal is nonzero, so the channel contracts index pairs
  // directly instead of forming dense Kraus matrices.
  Eigen::MatrixXd amp = Eigen::MatrixXd::Zero(dim, dim);  // amp(n, k)
  for (int k = 0; k < dim; ++k) {
    double logc = 0.0;  // log C(n+k, k), via the n-recursion
    for (int n = 0; n + k < dim; ++n) {
      if (n > 0)
        logc += std::log(static_cast<double>(n + k)) -
                std::log(static_cast<double>(n));
      amp(n, k) =
          std::exp(0.5 * (logc + n * std::log(eta) + k * std::log1p(-eta)));
    }
  }

  FockOperator out = rho;
  if (rho.modes == 1) {
    CMat acc = CMat::Zero(dim, dim);
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i + k < dim; ++i)
        for (int j = 0; j + k < dim; ++j)
          acc(i, j) += amp(i, k) * amp(j, k) * rho.matrix(i + k, j + k);
    out.matrix = acc;
  } else if (mode == 0) {
    CMat acc = CMat::Zero(dim * dim, dim * dim);
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i + k < dim; ++i)
        for (int j = 0; j + k < dim; ++j)
          acc.block(i * dim, j * dim, dim, dim) +=
              amp(i, k) * amp(j, k) *
              rho.matrix.block((i + k) * dim, (j + k) * dim, dim, dim);
    out.matrix = acc;
  } else {
    CMat acc = CMat::Zero(dim * dim, dim * dim);
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i + k < dim; ++i)
        for (int j = 0; j + k < dim; ++j) {
          const double w = amp(i, k) * amp(j, k);
          for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
              acc(a * dim + i, b * dim + j) +=
                  w * rho.matrix(a * dim + i + k, b * dim + j + k);
        }
    out.matrix = acc;
  }
  out.tail_mass = tail_of(out.matrix, dim, rho.modes);
  return out;
}

double displaced_parity_wigner(const FockOperator& rho, Complex beta) {
  if (rho.modes != 1) throw BadParameterError("expected a single-mode state");
  const CMat D = displacement_operator(rho.cutoff, beta);
  const CMat M = D * parity_matrix(rho.cutoff) * D.adjoint();
  return (2.0 / kPi) * (rho.matrix * M).trace().real();
}

double displaced_parity_wigner(const FockOperator& rho, Complex beta1,
                               Complex beta2) {
  if (rho.modes != 2) throw BadParameterError("expected a two-mode state");
  const CMat par = parity_matrix(rho.cutoff);
  const CMat D1 = displacement_operator(rho.cutoff, beta1);
  const CMat D2 = displacement_operator(rho.cutoff, beta2);
  const CMat M1 = D1 * par * D1.adjoint();
  const CMat M2 = D2 * par * D2.adjoint();
  const Complex tr = trace_two_mode(rho.matrix, M1, M2, rho.dim());
  return std::pow(2.0 / kPi, 2) * tr.real();
}

double oracle_bell(const FockOperator& rho, Complex a, Complex a2, Complex b,
                   Complex b2) {
  const double w_ab = displaced_parity_wigner(rho, a, b);
  const double w_ab2 = displaced_parity_wigner(rho, a, b2);
  const double w_a2b = displaced_parity_wigner(rho, a2, b);
  const double w_a2b2 = displaced_parity_wigner(rho, a2, b2);
  return 0.25 * kPi * kPi * (w_ab + w_ab2 + w_a2b - w_a2b2);
}

double purity(const FockOperator& rho) { return rho.matrix.squaredNorm(); }

double mean_photon(const FockOperator& rho, int mode) {
  if (mode < 0 || mode >= rho.modes) throw BadParameterError("bad mode");
  const int dim = rho.dim();
  double total = 0.0;
  if (rho.modes == 1) {
    for (int n = 0; n < dim; ++n) total += n * rho.matrix(n, n).real();
  } else {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const int idx = i * dim + j;
        total += (mode == 0 ? i : j) * rho.matrix(idx, idx).real();
      }
  }
  return total;
}

void validate_density(const FockOperator& rho, double herm_tol,
                      double trace_tol, double psd_tol) {
  const CMat& m = rho.matrix;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw StateCorruptionError("density matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > trace_tol ||
      std::abs(m.trace().imag()) > trace_tol)
    throw StateCorruptionError("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (m + m.adjoint()),
                                         Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -psd_tol)
    throw StateCorruptionError("density matrix has a negative eigenvalue");
}

}  // namespace thermcat::fock
