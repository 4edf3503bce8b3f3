#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "emho/coherent.hpp"
#include "emho/moments.hpp"

namespace emho {

enum class SqueezeConvention { Variance, StdDev };

// var_x * var_p of the coherent state labeled z.
double uncertainty_product(const MassProfile& profile, cdouble z,
                           const QuadConfig& cfg = {});

struct SqueezeParams {
  double sx;
  double sp;
};

// S = 2*Delta - 1 with Delta the variance or the standard deviation.
SqueezeParams squeezing_params(const MassProfile& profile, cdouble z,
                               SqueezeConvention convention,
                               const QuadConfig& cfg = {});

// A real-axis (alpha, z) sweep over one mass-profile family.
struct SweepSpec {
  enum class Family { Cosh, Rational };
  Family family = Family::Cosh;
  std::vector<double> alphas;
  std::vector<double> z_values;
  QuadConfig cfg;

  void validate() const;
};

struct SweepRow {
  double alpha = 0.0;
  double z_re = 0.0;
  double z_im = 0.0;
  MomentReport report;
  bool ok = false;
  std::string error;  // per-cell failure, recorded without aborting the sweep
};

// One row per (alpha, z), ordered by (alpha, z) regardless of execution
// order. Cell failures land in the row's error field.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Columns: family,alpha,z_re,z_im,mean_x,var_x,mean_p,var_p,product,
//          sx_var,sp_var,sx_std,sp_std,quad_err
void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                     std::ostream& out);

// Key-value sweep description:
//   family = cosh | rational
//   alphas = 1.0, 1.5
//   z = 0.1:3.0:0.1            (start:stop:step, stop inclusive)
//   z_values = 0.5, 1.0        (alternative to z)
//   abs_tol / rel_tol / max_depth / domain = lo:hi   (optional overrides)
SweepSpec parse_sweep_spec(std::istream& in, const std::string& source_name);
SweepSpec load_sweep_spec(const std::string& path);

const char* family_name(SweepSpec::Family family);

}  // namespace emho
