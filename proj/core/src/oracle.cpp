#include "emho/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "emho/states.hpp"

namespace emho {

namespace {

// Eigenvalue count below lambda via the Sturm sequence of T - lambda I.
int sturm_count(const DiscreteOperator& op, double lambda, double pivmin) {
  int count = 0;
  double q = op.diag[0] - lambda;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (int i = 1; i < op.n; ++i) {
    const double e = op.offdiag[i - 1];
    q = (op.diag[i] - lambda) - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// Tridiagonal LU with partial pivoting; two superdiagonals of fill.
struct PivotedLU {
  std::vector<double> lmul;      // multipliers
  std::vector<double> u0, u1, u2;
  std::vector<unsigned char> swapped;

  void factor(const DiscreteOperator& op, double shift) {
    const int n = op.n;
    lmul.assign(n, 0.0);
    u0.assign(n, 0.0);
    u1.assign(n, 0.0);
    u2.assign(n, 0.0);
    swapped.assign(n, 0);
    std::vector<double> d(n), e_lo(n, 0.0), e_hi(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = op.diag[i] - shift;
    for (int i = 0; i + 1 < n; ++i) {
      e_lo[i] = op.offdiag[i];  // row i+1, col i
      e_hi[i] = op.offdiag[i];  // row i, col i+1
    }
    const double tiny = 1e-300;
    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(e_lo[i]) > std::abs(d[i])) {
        swapped[i] = 1;
        std::swap(d[i], e_lo[i]);
        std::swap(e_hi[i], d[i + 1]);
        // row i gains a second superdiagonal element from row i+1
        u2[i] = e_hi[i + 1];
        e_hi[i + 1] = 0.0;
      }
      if (std::abs(d[i]) < tiny) d[i] = tiny;
      const double m = e_lo[i] / d[i];
      lmul[i] = m;
      d[i + 1] -= m * e_hi[i];
      if (swapped[i]) {
        e_hi[i + 1] -= m * u2[i];
      }
      u0[i] = d[i];
      u1[i] = e_hi[i];
    }
    if (std::abs(d[n - 1]) < tiny) d[n - 1] = tiny;
    u0[n - 1] = d[n - 1];
    if (n >= 2) u1[n - 1] = 0.0;
  }

  // Solves (T - shift I) v = rhs in place.
  void solve(std::vector<double>& v) const {
    const int n = static_cast<int>(u0.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(v[i], v[i + 1]);
      v[i + 1] -= lmul[i] * v[i];
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = v[i];
      if (i + 1 < n) s -= u1[i] * v[i + 1];
      if (i + 2 < n) s -= u2[i] * v[i + 2];
      v[i] = s / u0[i];
    }
  }
};

double xorshift_unit(std::uint64_t& state) {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
}

}  // namespace

double DiscreteOperator::lower_bound() const {
  double lo = diag[0] - (n > 1 ? std::abs(offdiag[0]) : 0.0);
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - radius);
  }
  return lo;
}

double DiscreteOperator::upper_bound() const {
  double hi = diag[0] + (n > 1 ? std::abs(offdiag[0]) : 0.0);
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(offdiag[i]);
    hi = std::max(hi, diag[i] + radius);
  }
  return hi;
}

DiscreteOperator discretize(const MassProfile& profile, double a, double b,
                            int n) {
  if (!(b > a)) throw domain_error("discretize: requires b > a");
  if (n < 3) throw domain_error("discretize: requires N >= 3");

  DiscreteOperator op;
  op.a = a;
  op.b = b;
  op.n = n;
  op.diag.resize(n);
  op.offdiag.resize(n - 1);

  const double h = op.h();
  auto inv_mass = [&profile](double x) {
    const double f = profile.inv_sqrt_mass2(x);
    return f * f;  // 1/(2m)
  };

  for (int i = 0; i < n; ++i) {
    const double xi = op.x(i);
    const double c_minus = inv_mass(xi - 0.5 * h) / (h * h);
    const double c_plus = inv_mass(xi + 0.5 * h) / (h * h);
    op.diag[i] = c_minus + c_plus + profile.potential_v(xi);
    if (i + 1 < n) op.offdiag[i] = -c_plus;
  }
  return op;
}

SpectrumReport eigen_lowest(const DiscreteOperator& op, int k) {
  if (k < 1) throw domain_error("eigen_lowest: k must be >= 1");
  if (k > 12) throw capability_error("eigen_lowest: k > 12 not supported");
  if (k > op.n) throw domain_error("eigen_lowest: k exceeds matrix size");

  double glo = op.lower_bound();
  double ghi = op.upper_bound();
  const double scale = std::max({std::abs(glo), std::abs(ghi), 1.0});
  const double pivmin = 1e-300;

  SpectrumReport report;
  report.a = op.a;
  report.b = op.b;
  report.n_grid = op.n;

  const double h = op.h();
  const double norm_t = std::max(std::abs(glo), std::abs(ghi));

  std::vector<std::vector<double>> accepted;
  for (int level = 0; level < k; ++level) {
    // Smallest lambda with count(lambda) >= level + 1.
    double lo = glo, hi = ghi;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * scale; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(op, mid, pivmin) >= level + 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const double lambda = 0.5 * (lo + hi);

    PivotedLU lu;
    lu.factor(op, lambda);

    std::uint64_t rng = 0x9e3779b97f4a7c15ULL + 0x100000001b3ULL * (level + 1);
    std::vector<double> v(op.n);
    for (double& vi : v) vi = xorshift_unit(rng);

    double residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 20; ++iter) {
      lu.solve(v);
      // Project out already-accepted levels; protects close eigenvalues.
      for (const auto& prev : accepted) {
        double dot = 0.0;
        for (int i = 0; i < op.n; ++i) dot += v[i] * prev[i];
        for (int i = 0; i < op.n; ++i) v[i] -= dot * prev[i];
      }
      double norm = 0.0;
      for (const double vi : v) norm += vi * vi;
      norm = std::sqrt(norm);
      if (!(norm > 0.0) || !std::isfinite(norm)) {
        for (double& vi : v) vi = xorshift_unit(rng);
        continue;
      }
      for (double& vi : v) vi /= norm;

      residual = 0.0;
      for (int i = 0; i < op.n; ++i) {
        double r = (op.diag[i] - lambda) * v[i];
        if (i > 0) r += op.offdiag[i - 1] * v[i - 1];
        if (i + 1 < op.n) r += op.offdiag[i] * v[i + 1];
        residual += r * r;
      }
      residual = std::sqrt(residual);
      if (residual <= 1e-9 * norm_t) break;
    }
    if (!(residual <= 1e-7 * norm_t)) {
      char msg[128];
      std::snprintf(msg, sizeof(msg),
                    "eigen_lowest: inverse iteration stagnated at level %d "
                    "(residual %.3e)",
                    level, residual);
      throw numerical_error(msg, lambda, residual);
    }
    accepted.push_back(v);

    // Rayleigh quotient sharpens the bisection estimate.
    double rq = 0.0;
    for (int i = 0; i < op.n; ++i) {
      double tv = op.diag[i] * v[i];
      if (i > 0) tv += op.offdiag[i - 1] * v[i - 1];
      if (i + 1 < op.n) tv += op.offdiag[i] * v[i + 1];
      rq += v[i] * tv;
    }

    // Weight-h normalization, largest-magnitude component positive.
    std::vector<double> grid_vec = v;
    double wnorm = 0.0;
    for (const double vi : grid_vec) wnorm += vi * vi * h;
    wnorm = std::sqrt(wnorm);
    int imax = 0;
    for (int i = 0; i < op.n; ++i) {
      if (std::abs(grid_vec[i]) > std::abs(grid_vec[imax])) imax = i;
    }
    const double sign = grid_vec[imax] < 0.0 ? -1.0 : 1.0;
    for (double& vi : grid_vec) vi = sign * vi / wnorm;

    report.levels.push_back(
        {level, rq, std::numeric_limits<double>::quiet_NaN()});
    report.vectors.push_back(std::move(grid_vec));
  }
  return report;
}

void compare_states(SpectrumReport& report, const MassProfile& profile,
                    int nmax) {
  if (nmax < 0) throw domain_error("compare_states: nmax must be >= 0");
  if (static_cast<int>(report.levels.size()) < nmax + 1) {
    throw domain_error("compare_states: report has fewer levels than nmax+1");
  }
  const double h = (report.b - report.a) / (report.n_grid + 1);
  for (int n = 0; n <= nmax; ++n) {
    const Wavefunction psi = eigenstate(profile, n);
    const std::vector<double>& vec = report.vectors[n];
    double dot = 0.0, norm_num = 0.0, norm_ana = 0.0;
    for (int i = 0; i < report.n_grid; ++i) {
      const double x = report.a + (i + 1) * h;
      const double ana = psi.value(x).real();
      dot += vec[i] * ana * h;
      norm_num += vec[i] * vec[i] * h;
      norm_ana += ana * ana * h;
    }
    const double overlap =
        std::abs(dot) / std::sqrt(norm_num * norm_ana);
    if (overlap < 0.5) {
      char msg[128];
      std::snprintf(msg, sizeof(msg),
                    "compare_states: level %d overlap %.4f signals a "
                    "grid/state mismatch",
                    n, overlap);
      throw numerical_error(msg, overlap);
    }
    report.levels[n].overlap = overlap;
  }
}

std::string spectrum_report_json(const SpectrumReport& report) {
  std::ostringstream os;
  os << "{\"levels\": [";
  char buf[160];
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const SpectrumLevel& lv = report.levels[i];
    if (std::isnan(lv.overlap)) {
      std::snprintf(buf, sizeof(buf),
                    "{\"n\": %d, \"energy\": %.17g, \"overlap\": null}",
                    lv.n, lv.energy);
    } else {
      std::snprintf(buf, sizeof(buf),
                    "{\"n\": %d, \"energy\": %.17g, \"overlap\": %.17g}",
                    lv.n, lv.energy, lv.overlap);
    }
    os << buf << (i + 1 < report.levels.size() ? ", " : "");
  }
  std::snprintf(buf, sizeof(buf),
                "], \"grid\": {\"a\": %.17g, \"b\": %.17g, \"N\": %d}}",
                report.a, report.b, report.n_grid);
  os << buf;
  return os.str();
}

}  // namespace emho
