#pragma once

#include <string>

#include "emho/quad.hpp"
#include "emho/states.hpp"

namespace emho {

// Physical x-p moments of a normalized state, with both squeezing
// conventions reported side by side. Momentum is the canonical -i d/dx.
struct MomentReport {
  double mean_x = 0.0;
  double var_x = 0.0;
  double mean_p = 0.0;
  double var_p = 0.0;
  double product = 0.0;  // var_x * var_p
  double sx_var = 0.0;   // 2*var_x - 1
  double sp_var = 0.0;   // 2*var_p - 1
  double sx_std = 0.0;   // 2*sqrt(var_x) - 1
  double sp_std = 0.0;   // 2*sqrt(var_p) - 1
  double quad_err = 0.0; // largest error estimate among the integrals
};

// Quadrature domain clipped to the profile's evaluable interior (tabulated
// profiles lose a stencil-width sliver at each table edge).
QuadConfig clip_domain(QuadConfig cfg, const MassProfile& profile);

// Requires psi normalized; renormalizes when the norm is within 1e-6 of 1
// and rejects otherwise with state_error.
MomentReport moments(const MassProfile& profile, const Wavefunction& psi,
                     const QuadConfig& cfg = {});

// Flat JSON object with every report field.
std::string moment_report_json(const MomentReport& report);

}  // namespace emho
