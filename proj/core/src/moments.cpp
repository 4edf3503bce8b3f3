#include "emho/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace emho {

QuadConfig clip_domain(QuadConfig cfg, const MassProfile& profile) {
  double lo = profile.domain_lo();
  double hi = profile.domain_hi();
  if (profile.kind() == MassProfile::Kind::Tabulated) {
    lo += 5e-4 * (1.0 + std::abs(lo));
    hi -= 5e-4 * (1.0 + std::abs(hi));
  }
  cfg.domain_lo = std::max(cfg.domain_lo, lo);
  cfg.domain_hi = std::min(cfg.domain_hi, hi);
  return cfg;
}

MomentReport moments(const MassProfile& profile, const Wavefunction& psi,
                     const QuadConfig& cfg_in) {
  const QuadConfig cfg = clip_domain(cfg_in, profile);
  const auto& val = psi.value;
  const auto& der = psi.deriv;

  double max_err = 0.0;
  auto track = [&max_err](const IntegralResult& r) {
    max_err = std::max(max_err, r.error);
    return r.value;
  };

  const double norm2 =
      track(integrate([&val](double x) -> cdouble {
              return std::norm(val(x));
            }, cfg)).real();
  if (std::abs(norm2 - 1.0) > 1e-6) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "moments: state norm^2 = %.9g is too far from 1", norm2);
    throw state_error(msg);
  }

  const double mean_x =
      track(integrate([&val](double x) -> cdouble {
              return x * std::norm(val(x));
            }, cfg)).real() / norm2;
  const double mom2_x =
      track(integrate([&val](double x) -> cdouble {
              return x * x * std::norm(val(x));
            }, cfg)).real() / norm2;
  const double mean_p =
      track(integrate([&val, &der](double x) -> cdouble {
              return std::conj(val(x)) * cdouble(0.0, -1.0) * der(x);
            }, cfg)).real() / norm2;
  // <p^2> through the first-derivative form.
  const double mom2_p =
      track(integrate([&der](double x) -> cdouble {
              return std::norm(der(x));
            }, cfg)).real() / norm2;

  MomentReport r;
  r.mean_x = mean_x;
  r.var_x = mom2_x - mean_x * mean_x;
  r.mean_p = mean_p;
  r.var_p = mom2_p - mean_p * mean_p;
  r.product = r.var_x * r.var_p;
  r.sx_var = 2.0 * r.var_x - 1.0;
  r.sp_var = 2.0 * r.var_p - 1.0;
  r.sx_std = 2.0 * std::sqrt(r.var_x) - 1.0;
  r.sp_std = 2.0 * std::sqrt(r.var_p) - 1.0;
  r.quad_err = max_err;
  return r;
}

std::string moment_report_json(const MomentReport& r) {
  char buf[640];
  std::snprintf(
      buf, sizeof(buf),
      "{\"mean_x\": %.17g, \"var_x\": %.17g, \"mean_p\": %.17g, "
      "\"var_p\": %.17g, \"product\": %.17g, \"sx_var\": %.17g, "
      "\"sp_var\": %.17g, \"sx_std\": %.17g, \"sp_std\": %.17g, "
      "\"quad_err\": %.17g}",
      r.mean_x, r.var_x, r.mean_p, r.var_p, r.product, r.sx_var, r.sp_var,
      r.sx_std, r.sp_std, r.quad_err);
  return buf;
}

}  // namespace emho
