#pragma once

// Gaussian-weighted coherent-state dyadics and the closed-form complex
// Gaussian integral they all reduce to.
//
// A measure over z in C^r has density
//     exp(log_norm) * exp(-z^dag P z + s.z + t.zbar),
// where z^dag P z = sum_jk conj(z_j) P(j,k) z_k.  Herm(P) must be positive
// definite for convergence; dim = 0 is a point mass (the V = 1 limit).
//
// A term attaches to each mode a ket amplitude mu_m(z) = u_m.z + a_m and a
// bra amplitude nu_m(z) = v_m.z + b_m and represents the operator
//     exp(log_weight) * Int dmu(z)  prod_m |mu_m(z)><nu_m(z)|.
// Because bras only ever enter conjugated, every exponent produced by the
// operations below stays in the (z zbar, z, zbar) class -- no holomorphic
// squares -- which is what keeps every integral closed-form.

#include <vector>

#include "thermcat/types.hpp"

namespace thermcat {

struct GaussianMeasure {
  int dim = 0;
  CMat P;  // P(j,k) multiplies -conj(z_j) z_k in the exponent
  CVec s;  // s(j) multiplies z_j
  CVec t;  // t(j) multiplies conj(z_j)
  Complex log_norm{0.0, 0.0};

  static GaussianMeasure point_mass();
  // Isotropic r=1 measure exp(-p |z|^2), no linear part.
  static GaussianMeasure isotropic(double p, Complex log_norm);
};

// log of  Int d^2r z exp(-z^dag P z + s.z + t.zbar)
//       = r log(pi) - log det(P) + s^T P^{-1} t.
// Throws NonConvergentError when Herm(P) has an eigenvalue <= 0.
Complex gaussian_log_integral(const CMat& P, const CVec& s, const CVec& t);

// z |-> coeff.z + offset
struct AffineAmplitude {
  CVec coeff;
  Complex offset{0.0, 0.0};

  static AffineAmplitude constant(Complex offset, int dim = 0);
  static AffineAmplitude variable(int index, int dim, Complex scale = 1.0,
                                  Complex offset = 0.0);
};

struct ModeDyadic {
  AffineAmplitude ket;
  AffineAmplitude bra;
};

struct GaussianDyadicTerm {
  GaussianMeasure measure;
  std::vector<ModeDyadic> modes;
  Complex log_weight{0.0, 0.0};

  int num_modes() const { return static_cast<int>(modes.size()); }
};

// Adjoint operator: ket/bra maps swap, measure and weight conjugate.
GaussianDyadicTerm adjoint(const GaussianDyadicTerm& term);

// log Tr term = log_weight + log_norm + Int dmu prod_m <nu_m|mu_m>,
// evaluated in closed form.  The per-term trace is never zero (it is an
// exponential); cancellations only happen across terms of a sum.
Complex log_trace(const GaussianDyadicTerm& term);

// Folds <nu_m|mu_m> of the given mode into the measure and removes the mode
// (partial trace over one oscillator).
GaussianDyadicTerm partial_trace_mode(const GaussianDyadicTerm& term, int mode);

// True when the two terms describe the same operator data within tol
// (measure entries, affine maps, and weight phase compared directly).
bool terms_match(const GaussianDyadicTerm& lhs, const GaussianDyadicTerm& rhs,
                 double tol = 1e-9);

}  // namespace thermcat
