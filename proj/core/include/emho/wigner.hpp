#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "emho/moments.hpp"
#include "emho/states.hpp"

namespace emho {

// Phase-space matrix W(x_i, p_j) with its diagnostics. Values are real; the
// imaginary residue of the transform is checked (< 1e-9) and discarded.
struct WignerGrid {
  std::vector<double> x_axis;
  std::vector<double> p_axis;
  std::vector<double> values;  // row-major: values[ix * p_axis.size() + ip]

  double max_imag_residue = 0.0;
  double max_cell_error = 0.0;
  int failed_cells = 0;

  // Filled by wigner_diagnostics.
  double total_mass = 0.0;
  double min_value = 0.0;
  double min_x = 0.0;
  double min_p = 0.0;
  double marginal_x_error = 0.0;
  double marginal_p_error = 0.0;
  bool negativity = false;

  double at(std::size_t ix, std::size_t ip) const {
    return values[ix * p_axis.size() + ip];
  }
};

struct WignerReport {
  double total_mass;
  double min_value;
  double min_x;
  double min_p;
  double max_abs;
  double marginal_x_error;
  double marginal_p_error;
  double max_imag_residue;
  double max_cell_error;
  int failed_cells;
  bool negativity;
};

//   W(x, p) = (1/pi) Int psi*(x - y) e^{2ipy} psi(x + y) dy
// per grid point by adaptive quadrature, the y-range truncated where
// |psi(x +- y)| < 1e-13. Cells that fail to converge are flagged and zeroed.
WignerGrid wigner_transform(const Wavefunction& psi,
                            std::vector<double> x_axis,
                            std::vector<double> p_axis,
                            const QuadConfig& cfg = {});

// Fills total mass, marginal errors against |psi|^2 and the Fourier
// transform, and the negativity flag (min below -10x the cell error).
// Requires |psi| < 1e-10 at the x-grid ends.
WignerReport wigner_diagnostics(WignerGrid& grid, const Wavefunction& psi,
                                const QuadConfig& cfg = {});

// Default axes: x in [x_c - 8, x_c + 8] with x_c = xbar_inverse(2 Re z),
// p in [-6, 6]; 257 points each.
std::vector<double> default_x_axis(const MassProfile& profile, cdouble z,
                                   int n = 257);
std::vector<double> default_p_axis(int n = 257);

// Long form `x,p,w`.
void write_wigner_csv(const WignerGrid& grid, std::ostream& out);
// Matrix form with the one-line header `# x0 dx nx p0 dp np`.
void write_wigner_matrix(const WignerGrid& grid, std::ostream& out);

std::string wigner_report_json(const WignerReport& report);

}  // namespace emho
