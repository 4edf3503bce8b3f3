#pragma once

#include <complex>
#include <functional>

#include "emho/errors.hpp"

namespace emho {

using cdouble = std::complex<double>;

// Tolerances and domain for adaptive quadrature. min_depth forces an initial
// uniform bisection (2^min_depth panels) so narrowly peaked integrands are
// sampled before any convergence test fires.
struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_depth = 48;
  double domain_lo = -12.0;
  double domain_hi = 12.0;
  int min_depth = 6;

  void validate() const;
};

struct IntegralResult {
  cdouble value;
  double error;  // achieved absolute error estimate
};

// Adaptive Gauss-Kronrod (G7/K15) over [a, b]. Throws numerical_error with
// the best estimate when max_depth is reached before convergence.
IntegralResult integrate_interval(const std::function<cdouble(double)>& f,
                                  double a, double b, const QuadConfig& cfg);

// Same, over cfg's domain.
IntegralResult integrate(const std::function<cdouble(double)>& f,
                         const QuadConfig& cfg = {});

// Real-valued convenience wrappers.
double integrate_real(const std::function<double(double)>& f,
                      const QuadConfig& cfg = {}, double* err_out = nullptr);

// Centered 5-point first derivative, h = 1e-4 * (1 + |x|).
double stencil_step(double x);
cdouble stencil_derivative(const std::function<cdouble(double)>& f, double x);
double stencil_derivative(const std::function<double(double)>& f, double x);

// Centered 5-point second derivative.
cdouble stencil_second_derivative(const std::function<cdouble(double)>& f,
                                  double x);

}  // namespace emho
