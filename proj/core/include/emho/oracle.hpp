#pragma once

#include <string>
#include <vector>

#include "emho/profiles.hpp"

namespace emho {

// Symmetric tridiagonal discretization of -d/dx[(1/2m) d/dx] + V with
// Dirichlet ends. N interior points, h = (b - a)/(N + 1), x_i = a + (i+1)h.
struct DiscreteOperator {
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  std::vector<double> diag;
  std::vector<double> offdiag;  // n - 1 couplings

  double h() const { return (b - a) / (n + 1); }
  double x(int i) const { return a + (i + 1) * h(); }

  // Gershgorin disc bounds.
  double lower_bound() const;
  double upper_bound() const;
};

// Half-point mass sampling keeps the matrix symmetric and second order:
// row i couples through 1/(2m(x_{i +- 1/2}) h^2).
DiscreteOperator discretize(const MassProfile& profile, double a, double b,
                            int n);

struct SpectrumLevel {
  int n;
  double energy;
  double overlap;  // NaN until compare_states fills it
};

struct SpectrumReport {
  double a = 0.0;
  double b = 0.0;
  int n_grid = 0;
  std::vector<SpectrumLevel> levels;
  // Eigenvectors on the interior grid, normalized with weight h.
  std::vector<std::vector<double>> vectors;
};

// k smallest eigenpairs (k <= 12) by Sturm-sequence bisection plus inverse
// iteration. Shares no code with the analytic eigenstates it validates.
SpectrumReport eigen_lowest(const DiscreteOperator& op, int k);

// Fills |<numeric_n, analytic_n>| (discrete cosine, sign-aligned) for
// n = 0..nmax. An overlap below 0.5 throws: the grid missed the state.
void compare_states(SpectrumReport& report, const MassProfile& profile,
                    int nmax);

// {"levels": [{"n", "energy", "overlap"}...], "grid": {"a", "b", "N"}}
std::string spectrum_report_json(const SpectrumReport& report);

}  // namespace emho
