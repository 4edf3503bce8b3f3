#include "emho/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "emho/parallel.hpp"

namespace emho {

namespace {

constexpr double kSupportCutoff = 1e-13;

struct SupportHull {
  double lo;
  double hi;
  bool empty;
};

// Where |psi| >= 1e-13, padded by one scan step. The y-integration is
// truncated to keep x +- y inside this hull.
SupportHull scan_support(const Wavefunction& psi, double lo, double hi) {
  constexpr int kScanPoints = 8000;
  const double step = (hi - lo) / kScanPoints;
  double slo = 0.0, shi = 0.0;
  bool found = false;
  for (int i = 0; i <= kScanPoints; ++i) {
    const double x = lo + i * step;
    if (std::abs(psi.value(x)) >= kSupportCutoff) {
      if (!found) {
        slo = x;
        found = true;
      }
      shi = x;
    }
  }
  if (!found) return {0.0, 0.0, true};
  return {std::max(lo, slo - step), std::min(hi, shi + step), false};
}

int depth_for_interval(double length) {
  // Panels of ~0.6 or narrower before the convergence test may fire.
  int d = 3;
  while (length / std::exp2(d) > 0.6 && d < 7) ++d;
  return d;
}

}  // namespace

WignerGrid wigner_transform(const Wavefunction& psi,
                            std::vector<double> x_axis,
                            std::vector<double> p_axis,
                            const QuadConfig& cfg) {
  cfg.validate();
  if (x_axis.size() < 2 || p_axis.size() < 2) {
    throw domain_error("wigner_transform: axes need at least 2 points");
  }

  const MassProfile& profile = psi.profile;
  double scan_lo = std::min(x_axis.front(), x_axis.back()) - 16.0;
  double scan_hi = std::max(x_axis.front(), x_axis.back()) + 16.0;
  if (profile.kind() == MassProfile::Kind::Tabulated) {
    const QuadConfig clipped = clip_domain(cfg, profile);
    scan_lo = std::max(scan_lo, clipped.domain_lo);
    scan_hi = std::min(scan_hi, clipped.domain_hi);
  }
  const SupportHull hull = scan_support(psi, scan_lo, scan_hi);

  WignerGrid grid;
  grid.x_axis = std::move(x_axis);
  grid.p_axis = std::move(p_axis);
  const std::size_t nx = grid.x_axis.size();
  const std::size_t np = grid.p_axis.size();
  grid.values.assign(nx * np, 0.0);

  std::vector<double> imag_residue(nx * np, 0.0);
  std::vector<double> cell_error(nx * np, 0.0);
  std::vector<unsigned char> failed(nx * np, 0);

  parallel_for(nx * np, [&](std::size_t cell) {
    const std::size_t ix = cell / np;
    const std::size_t ip = cell % np;
    const double x = grid.x_axis[ix];
    const double p = grid.p_axis[ip];

    if (hull.empty) return;
    const double r = std::min(x - hull.lo, hull.hi - x);
    if (!(r > 0.0)) return;

    auto integrand = [&psi, x, p](double y) -> cdouble {
      const cdouble left = std::conj(psi.value(x - y));
      const cdouble right = psi.value(x + y);
      return left * std::exp(cdouble(0.0, 2.0 * p * y)) * right;
    };
    QuadConfig cell_cfg = cfg;
    cell_cfg.min_depth = depth_for_interval(2.0 * r);
    try {
      const IntegralResult res =
          integrate_interval(integrand, -r, r, cell_cfg);
      grid.values[cell] = res.value.real() / M_PI;
      imag_residue[cell] = std::abs(res.value.imag()) / M_PI;
      cell_error[cell] = res.error / M_PI;
    } catch (const numerical_error& e) {
      failed[cell] = 1;
      cell_error[cell] = e.error_estimate() / M_PI;
    }
  });

  for (std::size_t i = 0; i < nx * np; ++i) {
    grid.max_imag_residue = std::max(grid.max_imag_residue, imag_residue[i]);
    grid.max_cell_error = std::max(grid.max_cell_error, cell_error[i]);
    grid.failed_cells += failed[i];
  }
  return grid;
}

WignerReport wigner_diagnostics(WignerGrid& grid, const Wavefunction& psi,
                                const QuadConfig& cfg) {
  const std::size_t nx = grid.x_axis.size();
  const std::size_t np = grid.p_axis.size();
  const double bl = std::abs(psi.value(grid.x_axis.front()));
  const double br = std::abs(psi.value(grid.x_axis.back()));
  if (bl > 1e-10 || br > 1e-10) {
    throw domain_error(
        "wigner_diagnostics: grid does not cover the state's support");
  }

  const double dx = grid.x_axis[1] - grid.x_axis[0];
  const double dp = grid.p_axis[1] - grid.p_axis[0];
  auto wt = [](std::size_t i, std::size_t n) {
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
  };

  double mass = 0.0;
  double min_value = grid.values.empty() ? 0.0 : grid.values[0];
  double max_abs = 0.0;
  std::size_t min_cell = 0;
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t ip = 0; ip < np; ++ip) {
      const double w = grid.values[ix * np + ip];
      mass += wt(ix, nx) * wt(ip, np) * w;
      max_abs = std::max(max_abs, std::abs(w));
      if (w < min_value) {
        min_value = w;
        min_cell = ix * np + ip;
      }
    }
  }
  mass *= dx * dp;

  double marg_x_err = 0.0;
  for (std::size_t ix = 0; ix < nx; ++ix) {
    double row = 0.0;
    for (std::size_t ip = 0; ip < np; ++ip) {
      row += wt(ip, np) * grid.values[ix * np + ip];
    }
    row *= dp;
    const double target = std::norm(psi.value(grid.x_axis[ix]));
    marg_x_err = std::max(marg_x_err, std::abs(row - target));
  }

  // p-marginal against the numerically Fourier-transformed state.
  const QuadConfig ft_cfg = clip_domain(cfg, psi.profile);
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
  double marg_p_err = 0.0;
  std::vector<double> col_err(np, 0.0);
  parallel_for(np, [&](std::size_t ip) {
    const double p = grid.p_axis[ip];
    const cdouble ft = integrate([&psi, p](double x) -> cdouble {
                         return psi.value(x) * std::exp(cdouble(0.0, -p * x));
                       }, ft_cfg).value *
                       inv_sqrt_2pi;
    double col = 0.0;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      col += wt(ix, nx) * grid.values[ix * np + ip];
    }
    col *= dx;
    col_err[ip] = std::abs(col - std::norm(ft));
  });
  for (const double e : col_err) marg_p_err = std::max(marg_p_err, e);

  grid.total_mass = mass;
  grid.min_value = min_value;
  grid.min_x = grid.x_axis[min_cell / np];
  grid.min_p = grid.p_axis[min_cell % np];
  grid.marginal_x_error = marg_x_err;
  grid.marginal_p_error = marg_p_err;
  const double noise = 10.0 * std::max(grid.max_cell_error, 1e-14);
  grid.negativity = min_value < -noise;

  WignerReport report;
  report.total_mass = mass;
  report.min_value = min_value;
  report.min_x = grid.min_x;
  report.min_p = grid.min_p;
  report.max_abs = max_abs;
  report.marginal_x_error = marg_x_err;
  report.marginal_p_error = marg_p_err;
  report.max_imag_residue = grid.max_imag_residue;
  report.max_cell_error = grid.max_cell_error;
  report.failed_cells = grid.failed_cells;
  report.negativity = grid.negativity;
  return report;
}

std::vector<double> default_x_axis(const MassProfile& profile, cdouble z,
                                   int n) {
  if (n < 2) throw domain_error("default_x_axis: need n >= 2");
  const double xc = profile.xbar_inverse(2.0 * z.real());
  double lo = xc - 8.0, hi = xc + 8.0;
  if (profile.kind() == MassProfile::Kind::Tabulated) {
    lo = std::max(lo, profile.domain_lo());
    hi = std::min(hi, profile.domain_hi());
  }
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) {
    axis[i] = lo + (hi - lo) * i / (n - 1);
  }
  return axis;
}

std::vector<double> default_p_axis(int n) {
  if (n < 2) throw domain_error("default_p_axis: need n >= 2");
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) {
    axis[i] = -6.0 + 12.0 * i / (n - 1);
  }
  return axis;
}

void write_wigner_csv(const WignerGrid& grid, std::ostream& out) {
  out << "x,p,w\n";
  char buf[128];
  for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
    for (std::size_t ip = 0; ip < grid.p_axis.size(); ++ip) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", grid.x_axis[ix],
                    grid.p_axis[ip], grid.at(ix, ip));
      out << buf;
    }
  }
}

void write_wigner_matrix(const WignerGrid& grid, std::ostream& out) {
  char buf[192];
  std::snprintf(buf, sizeof(buf), "# %.17g %.17g %zu %.17g %.17g %zu\n",
                grid.x_axis.front(),
                grid.x_axis[1] - grid.x_axis[0], grid.x_axis.size(),
                grid.p_axis.front(), grid.p_axis[1] - grid.p_axis[0],
                grid.p_axis.size());
  out << buf;
  for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
    for (std::size_t ip = 0; ip < grid.p_axis.size(); ++ip) {
      std::snprintf(buf, sizeof(buf), "%.17g%c", grid.at(ix, ip),
                    ip + 1 == grid.p_axis.size() ? '\n' : ' ');
      out << buf;
    }
  }
}

std::string wigner_report_json(const WignerReport& r) {
  char buf[640];
  std::snprintf(
      buf, sizeof(buf),
      "{\"total_mass\": %.17g, \"min_value\": %.17g, \"min_x\": %.17g, "
      "\"min_p\": %.17g, \"max_abs\": %.17g, \"marginal_x_error\": %.17g, "
      "\"marginal_p_error\": %.17g, \"max_imag_residue\": %.17g, "
      "\"max_cell_error\": %.17g, \"failed_cells\": %d, "
      "\"negativity\": %s}",
      r.total_mass, r.min_value, r.min_x, r.min_p, r.max_abs,
      r.marginal_x_error, r.marginal_p_error, r.max_imag_residue,
      r.max_cell_error, r.failed_cells, r.negativity ? "true" : "false");
  return buf;
}

}  // namespace emho
