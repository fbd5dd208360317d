#pragma once

// Test-only adaptive 2D quadrature over rectangles (tensor Simpson with
// recursive bisection).  Used as the independent integration oracle against
// the closed-form Gaussian results; never part of the library paths.

#include <cmath>
#include <complex>
#include <functional>

namespace testsupport {

using Complex = std::complex<double>;
using Integrand2D = std::function<Complex(double, double)>;

namespace detail {

inline Complex simpson2d(const Integrand2D& f, double x0, double x1, double y0,
                         double y1) {
  const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
  const double wx[3] = {1.0, 4.0, 1.0};
  const double xs[3] = {x0, xm, x1};
  const double ys[3] = {y0, ym, y1};
  Complex sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sum += wx[i] * wx[j] * f(xs[i], ys[j]);
  return sum * (x1 - x0) * (y1 - y0) / 36.0;
}

inline Complex adapt(const Integrand2D& f, double x0, double x1, double y0,
                     double y1, Complex whole, double tol, int depth) {
  const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
  const Complex q11 = simpson2d(f, x0, xm, y0, ym);
  const Complex q12 = simpson2d(f, x0, xm, ym, y1);
  const Complex q21 = simpson2d(f, xm, x1, y0, ym);
  const Complex q22 = simpson2d(f, xm, x1, ym, y1);
  const Complex sum = q11 + q12 + q21 + q22;
  if (depth <= 0 || std::abs(sum - whole) < 15.0 * tol) return sum;
  return adapt(f, x0, xm, y0, ym, q11, tol / 4.0, depth - 1) +
         adapt(f, x0, xm, ym, y1, q12, tol / 4.0, depth - 1) +
         adapt(f, xm, x1, y0, ym, q21, tol / 4.0, depth - 1) +
         adapt(f, xm, x1, ym, y1, q22, tol / 4.0, depth - 1);
}

}  // namespace detail

// Integrates f over [x0,x1] x [y0,y1] to absolute tolerance tol.
inline Complex integrate2d(const Integrand2D& f, double x0, double x1,
                           double y0, double y1, double tol = 1e-9,
                           int max_depth = 18) {
  const Complex whole = detail::simpson2d(f, x0, x1, y0, y1);
  return detail::adapt(f, x0, x1, y0, y1, whole, tol, max_depth);
}

// Integral over the centered square covering a disc of the given radius.
inline Complex integrate_plane(const Integrand2D& f, double radius,
                               double tol = 1e-9) {
  return integrate2d(f, -radius, radius, -radius, radius, tol);
}

}  // namespace testsupport
