#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>

#include "emho/profiles.hpp"
#include "emho/quad.hpp"

namespace emho {

// A position-space state: complex amplitude with its first derivative.
// Constructors from closed forms supply the derivative analytically;
// operator outputs fall back to a 5-point stencil on the value evaluator.
struct Wavefunction {
  std::function<cdouble(double)> value;
  std::function<cdouble(double)> deriv;
  MassProfile profile;
  std::string label;
};

// Wraps a value evaluator with a stencil derivative.
Wavefunction make_wavefunction(std::function<cdouble(double)> value,
                               MassProfile profile, std::string label);

// Physicists' Hermite polynomial by the three-term recurrence. n <= 200.
double hermite(int n, double u);

// Normalized n-th eigenstate of the factorized Hamiltonian. n <= 60.
Wavefunction eigenstate(const MassProfile& profile, int n);

// Lowering: (A psi)(x) = psi'(x)/sqrt(2m) + W psi(x).
Wavefunction apply_lowering(const MassProfile& profile,
                            const Wavefunction& psi);

// Raising: (A+ psi)(x) = -d/dx[psi/sqrt(2m)] + W psi(x).
Wavefunction apply_raising(const MassProfile& profile, const Wavefunction& psi);

// H psi = -d/dx[(1/2m) psi'] + V psi; shifted adds psi/2 so that the
// eigenvalues read n + 1/2 instead of n. Defaults to shifted.
Wavefunction hamiltonian_apply(const MassProfile& profile,
                               const Wavefunction& psi, bool shifted = true);

// Samples `x,re,im` rows onto out.
void write_samples_csv(const Wavefunction& psi, std::span<const double> grid,
                       std::ostream& out);

}  // namespace emho
