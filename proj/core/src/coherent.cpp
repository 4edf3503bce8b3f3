#include "emho/coherent.hpp"

#include <cmath>
#include <cstdio>

namespace emho {

namespace {

void check_displacement(cdouble z) {
  if (std::abs(z) > kMaxDisplacement) {
    char msg[96];
    std::snprintf(msg, sizeof(msg), "|z| = %.6g exceeds the guard %g",
                  std::abs(z), kMaxDisplacement);
    throw domain_error(msg);
  }
}

}  // namespace

Wavefunction coherent_state(const MassProfile& profile, cdouble z) {
  check_displacement(z);

  const double quartic_root_2pi = std::pow(2.0 * M_PI, 0.25);
  const cdouble prefactor =
      std::exp(-0.5 * (std::norm(z) - z * z)) / quartic_root_2pi;

  Wavefunction psi;
  psi.profile = profile;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "coherent z=%g%+gi [%s]", z.real(), z.imag(),
                profile.label().c_str());
  psi.label = buf;

  psi.value = [profile, z, prefactor](double x) -> cdouble {
    const double u = profile.xbar(x);
    const double q = std::sqrt(profile.sqrt_mass2(x));
    const cdouble arg = u - 2.0 * z;
    return prefactor * q * std::exp(-0.25 * arg * arg);
  };
  psi.deriv = [profile, z, prefactor](double x) -> cdouble {
    const double u = profile.xbar(x);
    const double s = profile.sqrt_mass2(x);
    const double fp = profile.inv_sqrt_mass2_d1(x);
    const double q = std::sqrt(s);
    const double qp = -0.5 * fp * q * q * q;
    const cdouble arg = u - 2.0 * z;
    const cdouble gauss = std::exp(-0.25 * arg * arg);
    return prefactor * gauss * (qp - 0.5 * q * s * arg);
  };
  return psi;
}

std::vector<cdouble> coherent_coefficients(cdouble z, int nmax) {
  if (nmax < 0) throw domain_error("coherent_coefficients: nmax must be >= 0");
  if (nmax > 60) {
    throw capability_error("coherent_coefficients: nmax > 60 not supported");
  }
  std::vector<cdouble> c(nmax + 1);
  c[0] = std::exp(-0.5 * std::norm(z));
  for (int n = 1; n <= nmax; ++n) {
    c[n] = c[n - 1] * z / std::sqrt(static_cast<double>(n));
  }
  return c;
}

Wavefunction evolve(const MassProfile& profile, cdouble z, double t) {
  check_displacement(z);
  const cdouble rotated = z * std::exp(cdouble(0.0, -t));
  const cdouble phase = std::exp(cdouble(0.0, -0.5 * t));
  Wavefunction base = coherent_state(profile, rotated);

  Wavefunction psi;
  psi.profile = profile;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "evolved z=%g%+gi t=%g [%s]", z.real(),
                z.imag(), t, profile.label().c_str());
  psi.label = buf;
  psi.value = [phase, v = base.value](double x) { return phase * v(x); };
  psi.deriv = [phase, d = base.deriv](double x) { return phase * d(x); };
  return psi;
}

QuadratureVariances quadrature_variances(const MassProfile& profile, cdouble z,
                                         const QuadConfig& cfg_in) {
  const QuadConfig cfg = clip_domain(cfg_in, profile);
  const Wavefunction psi = coherent_state(profile, z);
  const Wavefunction low = apply_lowering(profile, psi);
  const Wavefunction high = apply_raising(profile, psi);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto x_of = [&](double x) {
    return (low.value(x) + high.value(x)) * inv_sqrt2;
  };
  auto y_of = [&](double x) {
    return cdouble(0.0, -1.0) * (low.value(x) - high.value(x)) * inv_sqrt2;
  };

  auto variance_of = [&](const std::function<cdouble(double)>& op_psi) {
    const double mean =
        integrate([&](double x) -> cdouble {
          return std::conj(psi.value(x)) * op_psi(x);
        }, cfg).value.real();
    const double second =
        integrate([&](double x) -> cdouble {
          return std::norm(op_psi(x));
        }, cfg).value.real();
    return second - mean * mean;
  };

  return {variance_of(x_of), variance_of(y_of)};
}

}  // namespace emho
