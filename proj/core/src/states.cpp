#include "emho/states.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

namespace emho {

Wavefunction make_wavefunction(std::function<cdouble(double)> value,
                               MassProfile profile, std::string label) {
  Wavefunction psi;
  psi.value = std::move(value);
  psi.deriv = [v = psi.value](double x) { return stencil_derivative(v, x); };
  psi.profile = std::move(profile);
  psi.label = std::move(label);
  return psi;
}

double hermite(int n, double u) {
  if (n < 0) throw domain_error("hermite: n must be >= 0");
  if (n > 200) throw capability_error("hermite: n > 200 not supported");
  if (n == 0) return 1.0;
  double hm1 = 1.0;
  double h = 2.0 * u;
  for (int k = 1; k < n; ++k) {
    const double hp1 = 2.0 * u * h - 2.0 * k * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

Wavefunction eigenstate(const MassProfile& profile, int n) {
  if (n < 0) throw domain_error("eigenstate: n must be >= 0");
  if (n > 60) throw capability_error("eigenstate: n > 60 not supported");

  // [sqrt(2*pi) * 2^n * n!]^(-1/2), kept in log space.
  const double log_norm =
      -0.5 * (0.5 * std::log(2.0 * M_PI) + n * std::log(2.0) +
              std::lgamma(n + 1.0));
  const double norm = std::exp(log_norm);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Wavefunction psi;
  psi.profile = profile;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "eigenstate n=%d [%s]", n,
                profile.label().c_str());
  psi.label = buf;

  psi.value = [profile, n, norm, inv_sqrt2](double x) -> cdouble {
    const double u = profile.xbar(x);
    const double q = std::sqrt(profile.sqrt_mass2(x));
    return norm * q * std::exp(-0.25 * u * u) * hermite(n, u * inv_sqrt2);
  };
  psi.deriv = [profile, n, norm, inv_sqrt2](double x) -> cdouble {
    const double u = profile.xbar(x);
    const double s = profile.sqrt_mass2(x);
    const double fp = profile.inv_sqrt_mass2_d1(x);
    const double q = std::sqrt(s);
    const double qp = -0.5 * fp * q * q * q;
    const double v = u * inv_sqrt2;
    const double hn = hermite(n, v);
    const double dh = n > 0 ? std::sqrt(2.0) * n * hermite(n - 1, v) : 0.0;
    const double gauss = std::exp(-0.25 * u * u);
    return norm * gauss * (qp * hn + q * s * (dh - 0.5 * u * hn));
  };
  return psi;
}

Wavefunction apply_lowering(const MassProfile& profile,
                            const Wavefunction& psi) {
  auto value = [profile, val = psi.value, der = psi.deriv](double x) {
    return der(x) * profile.inv_sqrt_mass2(x) +
           profile.superpotential(x) * val(x);
  };
  return make_wavefunction(std::move(value), profile, "A(" + psi.label + ")");
}

Wavefunction apply_raising(const MassProfile& profile,
                           const Wavefunction& psi) {
  auto value = [profile, val = psi.value, der = psi.deriv](double x) {
    const double f = profile.inv_sqrt_mass2(x);
    const double fp = profile.inv_sqrt_mass2_d1(x);
    return -(fp * val(x) + f * der(x)) + profile.superpotential(x) * val(x);
  };
  return make_wavefunction(std::move(value), profile, "A+(" + psi.label + ")");
}

Wavefunction hamiltonian_apply(const MassProfile& profile,
                               const Wavefunction& psi, bool shifted) {
  auto flux = [profile, der = psi.deriv](double x) -> cdouble {
    const double f = profile.inv_sqrt_mass2(x);
    return f * f * der(x);
  };
  auto value = [profile, val = psi.value, flux, shifted](double x) -> cdouble {
    cdouble out = -stencil_derivative(flux, x) +
                  profile.potential_v(x) * val(x);
    if (shifted) out += 0.5 * val(x);
    return out;
  };
  return make_wavefunction(std::move(value), profile,
                           std::string(shifted ? "H+1/2(" : "H(") + psi.label +
                               ")");
}

void write_samples_csv(const Wavefunction& psi, std::span<const double> grid,
                       std::ostream& out) {
  out << "x,re,im\n";
  char buf[128];
  for (const double x : grid) {
    const cdouble v = psi.value(x);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", x, v.real(),
                  v.imag());
    out << buf;
  }
}

}  // namespace emho
