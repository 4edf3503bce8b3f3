#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "emho/errors.hpp"

namespace emho {

namespace detail {
struct PchipTable;
}

// A positive mass function 2m(x) together with everything derived pointwise
// from it: the mass-weighted coordinate xbar(x) = integral_0^x sqrt(2m),
// its inverse, the superpotential W and the potentials V, V~.
//
// Built-in kinds carry closed forms; Tabulated interpolates sqrt(2m) with a
// monotone cubic through the table and differentiates by centered stencils.
class MassProfile {
 public:
  enum class Kind { Constant, Cosh, Rational, Tabulated };

  // 2m = 1 everywhere.
  static MassProfile constant();
  // 2m = cosh^2(alpha x). alpha = 0 degenerates exactly to constant().
  static MassProfile cosh_mass(double alpha);
  // 2m = ((alpha + x^2) / (1 + x^2))^2, alpha > 0.
  static MassProfile rational_mass(double alpha);
  // Table of (x, 2m) samples with strictly increasing x straddling 0.
  static MassProfile tabulated(std::vector<double> x, std::vector<double> two_m,
                               std::string label = "tabulated");
  // Two-column CSV `x,two_m`; parse errors report path:line.
  static MassProfile from_csv(const std::string& path);

  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  const std::string& label() const noexcept { return label_; }

  // Working domain: [-12, 12] for built-ins, the table range for Tabulated.
  double domain_lo() const noexcept;
  double domain_hi() const noexcept;

  // 2m(x) > 0.
  double mass2(double x) const;
  // sqrt(2m(x)).
  double sqrt_mass2(double x) const;
  // f(x) = 1/sqrt(2m(x)) and its first two derivatives.
  double inv_sqrt_mass2(double x) const;
  double inv_sqrt_mass2_d1(double x) const;
  double inv_sqrt_mass2_d2(double x) const;

  // xbar(x) = integral_0^x sqrt(2m); strictly increasing.
  double xbar(double x) const;
  // Solves xbar(x) = u to 1e-12 absolute by safeguarded Newton/bisection.
  double xbar_inverse(double u) const;

  // W(x) = (f'(x) + xbar(x)) / 2.
  double superpotential(double x) const;
  double superpotential_d1(double x) const;
  // V(x) = W^2 - (W f)'.
  double potential_v(double x) const;
  // V~(x) = V + 2 W' f - f f''; equals V + 1 for any profile here.
  double partner_potential(double x) const;

 private:
  MassProfile(Kind kind, double alpha, std::string label);

  Kind kind_;
  double alpha_;
  std::string label_;
  std::shared_ptr<const detail::PchipTable> table_;
};

}  // namespace emho
