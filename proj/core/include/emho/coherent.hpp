#pragma once

#include <complex>
#include <vector>

#include "emho/moments.hpp"
#include "emho/states.hpp"

namespace emho {

// Working guard keeping the displaced peak inside the default domain.
inline constexpr double kMaxDisplacement = 10.0;

// Displacement-labeled Gaussian in the mass-weighted coordinate:
//   psi(x) = (2 pi)^(-1/4) e^{-(|z|^2 - z^2)/2} (2m)^{1/4} e^{-(xbar - 2z)^2/4}
// Normalized for every complex z; the complex exponents are kept exactly.
Wavefunction coherent_state(const MassProfile& profile, cdouble z);

// Fock coefficients c_n = e^{-|z|^2/2} z^n / sqrt(n!), n = 0..nmax (<= 60).
std::vector<cdouble> coherent_coefficients(cdouble z, int nmax);

// Evolved state e^{-it/2} * coherent_state(z e^{-it}); exact under the
// shifted Hamiltonian, global phase kept in the evaluators.
Wavefunction evolve(const MassProfile& profile, cdouble z, double t);

struct QuadratureVariances {
  double var_x;  // X = (A + A+)/sqrt(2)
  double var_y;  // Y = -i (A - A+)/sqrt(2)
};

// Both variances equal 1/2 for every coherent state; computed by quadrature
// through the ladder operators, not assumed.
QuadratureVariances quadrature_variances(const MassProfile& profile, cdouble z,
                                         const QuadConfig& cfg = {});

}  // namespace emho
