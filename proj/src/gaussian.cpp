#include "thermcat/gaussian.hpp"

#include <cmath>

namespace thermcat {

GaussianMeasure GaussianMeasure::point_mass() {
  GaussianMeasure m;
  m.dim = 0;
  m.P.resize(0, 0);
  m.s.resize(0);
  m.t.resize(0);
  return m;
}

GaussianMeasure GaussianMeasure::isotropic(double p, Complex log_norm) {
  GaussianMeasure m;
  m.dim = 1;
  m.P = CMat::Constant(1, 1, Complex(p, 0.0));
  m.s = CVec::Zero(1);
  m.t = CVec::Zero(1);
  m.log_norm = log_norm;
  return m;
}

Complex gaussian_log_integral(const CMat& P, const CVec& s, const CVec& t) {
  const auto r = P.rows();
  if (r == 0) return Complex(0.0, 0.0);

  CMat herm = 0.5 * (P + P.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(herm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw NonConvergentError("gaussian integral: Herm(P) not positive definite");

  Eigen::PartialPivLU<CMat> lu(P);
  Complex log_det = 0.0;
  // log det from the LU factors; the permutation contributes only a sign.
  for (Eigen::Index i = 0; i < r; ++i) log_det += std::log(lu.matrixLU()(i, i));
  if (lu.permutationP().determinant() < 0) log_det += Complex(0.0, kPi);

  Complex cross = (s.transpose() * lu.solve(t))(0, 0);
  return static_cast<double>(r) * std::log(kPi) - log_det + cross;
}

AffineAmplitude AffineAmplitude::constant(Complex offset, int dim) {
  AffineAmplitude a;
  a.coeff = CVec::Zero(dim);
  a.offset = offset;
  return a;
}

AffineAmplitude AffineAmplitude::variable(int index, int dim, Complex scale,
                                          Complex offset) {
  AffineAmplitude a;
  a.coeff = CVec::Zero(dim);
  a.coeff(index) = scale;
  a.offset = offset;
  return a;
}

GaussianDyadicTerm adjoint(const GaussianDyadicTerm& term) {
  GaussianDyadicTerm adj = term;
  // conj of -z^dag P z is -z^dag P^H z; s and t swap conjugated.
  adj.measure.P = term.measure.P.adjoint();
  adj.measure.s = term.measure.t.conjugate();
  adj.measure.t = term.measure.s.conjugate();
  adj.measure.log_norm = std::conj(term.measure.log_norm);
  adj.log_weight = std::conj(term.log_weight);
  for (auto& mode : adj.modes) std::swap(mode.ket, mode.bra);
  return adj;
}

namespace {

// Shared by trace and partial trace: the exponent of prod <nu|mu> for one
// mode,  conj(nu) mu - |mu|^2/2 - |nu|^2/2,  split into measure updates.
// The constant part uses  a conj(b) - |a|^2/2 - |b|^2/2
//   = -(1/2)(a-b)(conj(a)-conj(b)) + i Im(a conj(b)),
// which avoids cancellation when a and b are close.
struct OverlapFold {
  CMat dP;       // added to P (minus-exponent convention)
  CVec ds, dt;
  Complex dconst;
};

OverlapFold fold_overlap(const ModeDyadic& mode) {
  const CVec& u = mode.ket.coeff;
  const CVec& v = mode.bra.coeff;
  const Complex a = mode.ket.offset;
  const Complex b = mode.bra.offset;

  OverlapFold f;
  f.dP = 0.5 * (u.conjugate() * u.transpose() + v.conjugate() * v.transpose()) -
         v.conjugate() * u.transpose();
  f.ds = std::conj(b) * u - 0.5 * (std::conj(a) * u + std::conj(b) * v);
  f.dt = a * v.conjugate() - 0.5 * (a * u.conjugate() + b * v.conjugate());
  const Complex diff = a - b;
  f.dconst = -0.5 * diff * std::conj(diff) +
             kI * std::imag(a * std::conj(b));
  return f;
}

}  // namespace

Complex log_trace(const GaussianDyadicTerm& term) {
  CMat P = term.measure.P;
  CVec s = term.measure.s;
  CVec t = term.measure.t;
  Complex c = term.log_weight + term.measure.log_norm;
  for (const auto& mode : term.modes) {
    OverlapFold f = fold_overlap(mode);
    P += f.dP;
    s += f.ds;
    t += f.dt;
    c += f.dconst;
  }
  return c + gaussian_log_integral(P, s, t);
}

GaussianDyadicTerm partial_trace_mode(const GaussianDyadicTerm& term, int mode) {
  GaussianDyadicTerm out = term;
  OverlapFold f = fold_overlap(term.modes.at(mode));
  out.measure.P += f.dP;
  out.measure.s += f.ds;
  out.measure.t += f.dt;
  out.log_weight += f.dconst;
  out.modes.erase(out.modes.begin() + mode);
  return out;
}

namespace {

bool close(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a - b).cwiseAbs().maxCoeff() <= tol * (1.0 + a.cwiseAbs().maxCoeff());
}

}  // namespace

bool terms_match(const GaussianDyadicTerm& lhs, const GaussianDyadicTerm& rhs,
                 double tol) {
  if (lhs.num_modes() != rhs.num_modes()) return false;
  if (lhs.measure.dim != rhs.measure.dim) return false;
  if (!close(lhs.measure.P, rhs.measure.P, tol)) return false;
  if (!close(lhs.measure.s, rhs.measure.s, tol)) return false;
  if (!close(lhs.measure.t, rhs.measure.t, tol)) return false;
  for (int m = 0; m < lhs.num_modes(); ++m) {
    if (!close(lhs.modes[m].ket.coeff, rhs.modes[m].ket.coeff, tol)) return false;
    if (!close(lhs.modes[m].bra.coeff, rhs.modes[m].bra.coeff, tol)) return false;
    if (std::abs(lhs.modes[m].ket.offset - rhs.modes[m].ket.offset) > tol)
      return false;
    if (std::abs(lhs.modes[m].bra.offset - rhs.modes[m].bra.offset) > tol)
      return false;
  }
  // Weights and measure norms compare as one combined log: equal modulo 2 pi i.
  const Complex d = (lhs.log_weight + lhs.measure.log_norm) -
                    (rhs.log_weight + rhs.measure.log_norm);
  return std::abs(std::exp(d) - 1.0) <= tol;
}

}  // namespace thermcat
