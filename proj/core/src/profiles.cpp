#include "emho/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace emho {

namespace detail {

// Monotone cubic (Fritsch-Carlson) interpolant of sqrt(2m) over the table,
// plus the cumulative integral at the nodes.
struct PchipTable {
  std::vector<double> x;       // strictly increasing nodes
  std::vector<double> s;       // sqrt(2m) at the nodes
  std::vector<double> slope;   // limited derivatives at the nodes
  std::vector<double> cumint;  // integral of s from x[0] to x[i]
  double cum_at_zero = 0.0;    // integral of s from x[0] to 0

  double lo() const { return x.front(); }
  double hi() const { return x.back(); }

  int interval_of(double xx) const {
    // Largest i with x[i] <= xx, clamped to a valid interval index.
    const auto it = std::upper_bound(x.begin(), x.end(), xx);
    int i = static_cast<int>(it - x.begin()) - 1;
    return std::clamp(i, 0, static_cast<int>(x.size()) - 2);
  }

  double eval(double xx) const {
    const int i = interval_of(xx);
    const double h = x[i + 1] - x[i];
    const double t = (xx - x[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * s[i] + h * h10 * slope[i] + h01 * s[i + 1] +
           h * h11 * slope[i + 1];
  }

  // Adaptive Simpson over the interpolant; exact on each cubic piece.
  double simpson(double a, double b) const {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = eval(a), fm = eval(m), fb = eval(b);
    return simpson_step(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4 * fm + fb),
                        20);
  }

  double simpson_step(double a, double b, double fa, double fm, double fb,
                      double whole, int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = eval(lm), frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 1e-13) {
      return left + right + (left + right - whole) / 15.0;
    }
    return simpson_step(a, m, fa, flm, fm, left, depth - 1) +
           simpson_step(m, b, fm, frm, fb, right, depth - 1);
  }

  // Integral of s from x[0] to xx, using the cached node cumulative.
  double raw_integral(double xx) const {
    const int i = interval_of(xx);
    return cumint[i] + simpson(x[i], xx);
  }
};

namespace {

std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  std::vector<double> h(n - 1), delta(n - 1), d(n);
  for (int i = 0; i < n - 1; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  for (int i = 1; i < n - 1; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2 * h[i] + h[i - 1];
      const double w2 = h[i] + 2 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) return 0.0;
    if (d0 * d1 <= 0.0 && std::abs(s) > 3 * std::abs(d0)) return 3 * d0;
    return s;
  };
  d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

}  // namespace
}  // namespace detail

namespace {

constexpr double kBuiltinDomain = 12.0;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw domain_error(std::string(what) + ": argument must be finite");
  }
}

[[noreturn]] void throw_line(const std::string& path, int line,
                             const std::string& msg) {
  std::ostringstream os;
  os << path << ":" << line << ": " << msg;
  throw parse_error(os.str());
}

}  // namespace

MassProfile::MassProfile(Kind kind, double alpha, std::string label)
    : kind_(kind), alpha_(alpha), label_(std::move(label)) {}

MassProfile MassProfile::constant() {
  return MassProfile(Kind::Constant, 0.0, "constant");
}

MassProfile MassProfile::cosh_mass(double alpha) {
  require_finite(alpha, "cosh_mass");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "cosh alpha=%g", alpha);
  return MassProfile(Kind::Cosh, alpha, buf);
}

MassProfile MassProfile::rational_mass(double alpha) {
  require_finite(alpha, "rational_mass");
  if (!(alpha > 0.0)) {
    throw domain_error("rational_mass: alpha must be > 0");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "rational alpha=%g", alpha);
  return MassProfile(Kind::Rational, alpha, buf);
}

MassProfile MassProfile::tabulated(std::vector<double> x,
                                   std::vector<double> two_m,
                                   std::string label) {
  if (x.size() != two_m.size()) {
    throw domain_error("tabulated: x and two_m size mismatch");
  }
  if (x.size() < 4) {
    throw domain_error("tabulated: need at least 4 samples");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(two_m[i])) {
      throw domain_error("tabulated: non-finite sample");
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw domain_error("tabulated: x must be strictly increasing");
    }
    if (!(two_m[i] > 0.0)) {
      throw domain_error("tabulated: 2m must be positive");
    }
  }
  if (!(x.front() < 0.0 && x.back() > 0.0)) {
    throw domain_error("tabulated: table must straddle x = 0 (xbar anchors there)");
  }

  auto table = std::make_shared<detail::PchipTable>();
  table->x = std::move(x);
  table->s.resize(table->x.size());
  for (std::size_t i = 0; i < table->s.size(); ++i) {
    table->s[i] = std::sqrt(two_m[i]);
  }
  table->slope = detail::pchip_slopes(table->x, table->s);

  table->cumint.assign(table->x.size(), 0.0);
  for (std::size_t i = 1; i < table->x.size(); ++i) {
    table->cumint[i] =
        table->cumint[i - 1] + table->simpson(table->x[i - 1], table->x[i]);
  }
  table->cum_at_zero = table->raw_integral(0.0);

  // Positivity probe of the interpolant between the nodes.
  const double lo = table->lo(), hi = table->hi();
  for (int i = 0; i <= 10000; ++i) {
    const double xx = lo + (hi - lo) * i / 10000.0;
    if (!(table->eval(xx) > 0.0)) {
      throw domain_error("tabulated: interpolated 2m is not positive everywhere");
    }
  }

  MassProfile p(Kind::Tabulated, 0.0, std::move(label));
  p.table_ = std::move(table);
  return p;
}

MassProfile MassProfile::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error(path + ": cannot open file");
  }
  std::vector<double> xs, ms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (lineno == 1 && trimmed.find_first_not_of(
                           "0123456789+-.eE, \t\r") != std::string::npos) {
      continue;  // header row
    }
    const auto comma = trimmed.find(',');
    if (comma == std::string::npos) {
      throw_line(path, lineno, "expected two comma-separated columns");
    }
    char* end = nullptr;
    const std::string c0 = trimmed.substr(0, comma);
    const std::string c1 = trimmed.substr(comma + 1);
    const double xv = std::strtod(c0.c_str(), &end);
    if (end == c0.c_str() || !std::isfinite(xv)) {
      throw_line(path, lineno, "bad x value '" + c0 + "'");
    }
    const double mv = std::strtod(c1.c_str(), &end);
    if (end == c1.c_str() || !std::isfinite(mv)) {
      throw_line(path, lineno, "bad two_m value '" + c1 + "'");
    }
    if (!xs.empty() && !(xv > xs.back())) {
      throw_line(path, lineno, "x values must be strictly increasing");
    }
    if (!(mv > 0.0)) {
      throw_line(path, lineno, "two_m must be positive");
    }
    xs.push_back(xv);
    ms.push_back(mv);
  }
  if (xs.size() < 4) {
    throw parse_error(path + ": need at least 4 data rows");
  }
  return tabulated(std::move(xs), std::move(ms), "tabulated:" + path);
}

double MassProfile::domain_lo() const noexcept {
  return table_ ? table_->lo() : -kBuiltinDomain;
}

double MassProfile::domain_hi() const noexcept {
  return table_ ? table_->hi() : kBuiltinDomain;
}

double MassProfile::sqrt_mass2(double x) const {
  require_finite(x, "sqrt_mass2");
  switch (kind_) {
    case Kind::Constant:
      return 1.0;
    case Kind::Cosh:
      return alpha_ == 0.0 ? 1.0 : std::cosh(alpha_ * x);
    case Kind::Rational:
      return (alpha_ + x * x) / (1.0 + x * x);
    case Kind::Tabulated:
      if (x < table_->lo() || x > table_->hi()) {
        throw domain_error("tabulated profile: x outside table range");
      }
      return table_->eval(x);
  }
  return 1.0;
}

double MassProfile::mass2(double x) const {
  const double s = sqrt_mass2(x);
  return s * s;
}

double MassProfile::inv_sqrt_mass2(double x) const {
  return 1.0 / sqrt_mass2(x);
}

double MassProfile::inv_sqrt_mass2_d1(double x) const {
  require_finite(x, "inv_sqrt_mass2_d1");
  switch (kind_) {
    case Kind::Constant:
      return 0.0;
    case Kind::Cosh: {
      if (alpha_ == 0.0) return 0.0;
      const double sech = 1.0 / std::cosh(alpha_ * x);
      return -alpha_ * sech * std::tanh(alpha_ * x);
    }
    case Kind::Rational: {
      const double q = alpha_ + x * x;
      return 2.0 * x * (alpha_ - 1.0) / (q * q);
    }
    case Kind::Tabulated: {
      const double h = 1e-4 * (1.0 + std::abs(x));
      if (x - 2 * h < table_->lo() || x + 2 * h > table_->hi()) {
        throw domain_error("tabulated profile: stencil exceeds table range");
      }
      auto f = [this](double xx) { return inv_sqrt_mass2(xx); };
      return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) /
             (12 * h);
    }
  }
  return 0.0;
}

double MassProfile::inv_sqrt_mass2_d2(double x) const {
  require_finite(x, "inv_sqrt_mass2_d2");
  switch (kind_) {
    case Kind::Constant:
      return 0.0;
    case Kind::Cosh: {
      if (alpha_ == 0.0) return 0.0;
      const double sech = 1.0 / std::cosh(alpha_ * x);
      const double tanh = std::tanh(alpha_ * x);
      return alpha_ * alpha_ * sech * (tanh * tanh - sech * sech);
    }
    case Kind::Rational: {
      const double q = alpha_ + x * x;
      return 2.0 * (alpha_ - 1.0) * (alpha_ - 3.0 * x * x) / (q * q * q);
    }
    case Kind::Tabulated: {
      const double h = 1e-4 * (1.0 + std::abs(x));
      if (x - 2 * h < table_->lo() || x + 2 * h > table_->hi()) {
        throw domain_error("tabulated profile: stencil exceeds table range");
      }
      auto f = [this](double xx) { return inv_sqrt_mass2(xx); };
      return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) -
              f(x + 2 * h)) /
             (12 * h * h);
    }
  }
  return 0.0;
}

double MassProfile::xbar(double x) const {
  require_finite(x, "xbar");
  switch (kind_) {
    case Kind::Constant:
      return x;
    case Kind::Cosh:
      return alpha_ == 0.0 ? x : std::sinh(alpha_ * x) / alpha_;
    case Kind::Rational:
      return x + (alpha_ - 1.0) * std::atan(x);
    case Kind::Tabulated:
      if (x < table_->lo() || x > table_->hi()) {
        throw domain_error("tabulated profile: x outside table range");
      }
      return table_->raw_integral(x) - table_->cum_at_zero;
  }
  return x;
}

double MassProfile::xbar_inverse(double u) const {
  require_finite(u, "xbar_inverse");

  if (kind_ == Kind::Tabulated) {
    const double ulo = xbar(table_->lo()), uhi = xbar(table_->hi());
    if (u < ulo || u > uhi) {
      throw domain_error("tabulated profile: u outside xbar range");
    }
  }

  // Starting guess; exact for Constant and Cosh.
  double x0;
  switch (kind_) {
    case Kind::Constant:
      return u;
    case Kind::Cosh:
      x0 = alpha_ == 0.0 ? u : std::asinh(alpha_ * u) / alpha_;
      break;
    case Kind::Rational:
      x0 = u;
      break;
    case Kind::Tabulated:
    default:
      x0 = std::clamp(u, table_->lo(), table_->hi());
      break;
  }

  // Bracket by expansion around the guess; xbar is strictly increasing.
  auto fval = [this, u](double x) { return xbar(x) - u; };
  double lo = x0, hi = x0;
  double f_lo = fval(lo), f_hi = f_lo;
  double step = 0.5 * (1.0 + std::abs(x0));
  for (int i = 0; f_lo > 0.0; ++i) {
    if (i > 200 || !std::isfinite(lo)) {
      throw numerical_error("xbar_inverse: bracket expansion failed (u too large)");
    }
    hi = lo;
    lo -= step;
    step *= 2.0;
    if (kind_ == Kind::Tabulated) lo = std::max(lo, table_->lo());
    f_lo = fval(lo);
  }
  step = 0.5 * (1.0 + std::abs(x0));
  for (int i = 0; f_hi < 0.0; ++i) {
    if (i > 200 || !std::isfinite(hi)) {
      throw numerical_error("xbar_inverse: bracket expansion failed (u too large)");
    }
    lo = hi;
    hi += step;
    step *= 2.0;
    if (kind_ == Kind::Tabulated) hi = std::min(hi, table_->hi());
    f_hi = fval(hi);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw numerical_error("xbar_inverse: bracket endpoints not representable");
  }

  // Newton with bisection safeguard.
  double x = std::clamp(x0, lo, hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = fval(x);
    if (fx > 0.0) {
      hi = x;
    } else if (fx < 0.0) {
      lo = x;
    } else {
      return x;
    }
    const double deriv = sqrt_mass2(x);
    double next = x - fx / deriv;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= 1e-13 * (1.0 + std::abs(x)) ||
        hi - lo <= 1e-13 * (1.0 + std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

double MassProfile::superpotential(double x) const {
  return 0.5 * (inv_sqrt_mass2_d1(x) + xbar(x));
}

double MassProfile::superpotential_d1(double x) const {
  return 0.5 * (inv_sqrt_mass2_d2(x) + sqrt_mass2(x));
}

double MassProfile::potential_v(double x) const {
  const double w = superpotential(x);
  const double wp = superpotential_d1(x);
  const double f = inv_sqrt_mass2(x);
  const double fp = inv_sqrt_mass2_d1(x);
  return w * w - (wp * f + w * fp);
}

double MassProfile::partner_potential(double x) const {
  const double wp = superpotential_d1(x);
  const double f = inv_sqrt_mass2(x);
  const double fpp = inv_sqrt_mass2_d2(x);
  return potential_v(x) + 2.0 * wp * f - f * fpp;
}

}  // namespace emho
