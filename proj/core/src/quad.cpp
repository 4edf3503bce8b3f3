#include "emho/quad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace emho {
namespace {

// QUADPACK dqk15 abscissae and weights (positive half, node 7 is the center).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelEstimate {
  cdouble integral;
  double error;
};

PanelEstimate gk15(const std::function<cdouble(double)>& f, double a,
                   double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  cdouble fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXgk[i]);
    fv[14 - i] = f(center + half * kXgk[i]);
  }
  fv[7] = f(center);

  cdouble resk = 0.0, resg = 0.0;
  double resabs = 0.0;
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
  }
  resk += kWgk[7] * fv[7];
  resabs += kWgk[7] * std::abs(fv[7]);
  // Gauss-7 nodes are the odd-index Kronrod nodes.
  resg = kWg[3] * fv[7];
  for (int i = 0; i < 3; ++i) {
    resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  }

  const cdouble mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
  }
  resasc *= half;
  resabs *= half;

  double err = std::abs(resk - resg) * half;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  if (eps50 > 0.0) err = std::max(err, eps50);
  return {resk * half, err};
}

struct Accumulator {
  cdouble total = 0.0;
  double error = 0.0;
  bool converged = true;
};

void refine(const std::function<cdouble(double)>& f, double a, double b,
            int depth, double local_abs_tol, const QuadConfig& cfg,
            double scale_hint, Accumulator& acc) {
  const PanelEstimate est = gk15(f, a, b);
  const double rel_goal = cfg.rel_tol * std::max(std::abs(est.integral),
                                                 scale_hint * (b - a));
  if (depth >= cfg.min_depth &&
      (est.error <= std::max(local_abs_tol, rel_goal) ||
       depth >= cfg.max_depth)) {
    if (est.error > std::max(local_abs_tol, rel_goal)) acc.converged = false;
    acc.total += est.integral;
    acc.error += est.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(f, a, mid, depth + 1, 0.5 * local_abs_tol, cfg, scale_hint, acc);
  refine(f, mid, b, depth + 1, 0.5 * local_abs_tol, cfg, scale_hint, acc);
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw domain_error("quadrature tolerances must be positive");
  }
  if (!(domain_hi > domain_lo)) {
    throw domain_error("quadrature domain is degenerate");
  }
  if (max_depth < 1 || min_depth < 0 || min_depth > max_depth) {
    throw domain_error("quadrature depth bounds are inconsistent");
  }
}

IntegralResult integrate_interval(const std::function<cdouble(double)>& f,
                                  double a, double b, const QuadConfig& cfg) {
  cfg.validate();
  if (a == b) return {0.0, 0.0};
  if (!(b > a)) throw domain_error("integrate_interval: requires b >= a");

  // First pass gives a magnitude scale for the relative-tolerance goal.
  const PanelEstimate coarse = gk15(f, a, b);
  const double scale_hint = std::abs(coarse.integral) / (b - a);

  Accumulator acc;
  refine(f, a, b, 0, cfg.abs_tol, cfg, scale_hint, acc);
  if (!acc.converged &&
      acc.error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc.total))) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "quadrature did not converge on [%g, %g]: "
                  "error estimate %.3e (abs_tol %.3e)",
                  a, b, acc.error, cfg.abs_tol);
    throw numerical_error(msg, acc.total.real(), acc.error);
  }
  return {acc.total, acc.error};
}

IntegralResult integrate(const std::function<cdouble(double)>& f,
                         const QuadConfig& cfg) {
  return integrate_interval(f, cfg.domain_lo, cfg.domain_hi, cfg);
}

double integrate_real(const std::function<double(double)>& f,
                      const QuadConfig& cfg, double* err_out) {
  const IntegralResult r =
      integrate([&f](double x) -> cdouble { return f(x); }, cfg);
  if (err_out) *err_out = r.error;
  return r.value.real();
}

double stencil_step(double x) { return 1e-4 * (1.0 + std::abs(x)); }

cdouble stencil_derivative(const std::function<cdouble(double)>& f, double x) {
  const double h = stencil_step(x);
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h);
}

double stencil_derivative(const std::function<double(double)>& f, double x) {
  const double h = stencil_step(x);
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h);
}

cdouble stencil_second_derivative(const std::function<cdouble(double)>& f,
                                  double x) {
  const double h = 10.0 * stencil_step(x);
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) -
          f(x + 2 * h)) /
         (12.0 * h * h);
}

}  // namespace emho
