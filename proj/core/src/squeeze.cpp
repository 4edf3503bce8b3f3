#include "emho/squeeze.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "emho/parallel.hpp"

namespace emho {

double uncertainty_product(const MassProfile& profile, cdouble z,
                           const QuadConfig& cfg) {
  const Wavefunction psi = coherent_state(profile, z);
  return moments(profile, psi, cfg).product;
}

SqueezeParams squeezing_params(const MassProfile& profile, cdouble z,
                               SqueezeConvention convention,
                               const QuadConfig& cfg) {
  const Wavefunction psi = coherent_state(profile, z);
  const MomentReport r = moments(profile, psi, cfg);
  if (convention == SqueezeConvention::Variance) {
    return {r.sx_var, r.sp_var};
  }
  return {r.sx_std, r.sp_std};
}

void SweepSpec::validate() const {
  if (alphas.empty() || z_values.empty()) {
    throw domain_error("sweep spec: alphas and z values must be non-empty");
  }
  if (family == Family::Rational) {
    for (const double a : alphas) {
      if (!(a > 0.0)) {
        throw domain_error("sweep spec: rational alphas must be > 0");
      }
    }
  }
  cfg.validate();
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();

  std::vector<double> alphas = spec.alphas;
  std::vector<double> zs = spec.z_values;
  std::sort(alphas.begin(), alphas.end());
  std::sort(zs.begin(), zs.end());

  std::vector<SweepRow> rows(alphas.size() * zs.size());
  for (std::size_t ia = 0; ia < alphas.size(); ++ia) {
    for (std::size_t iz = 0; iz < zs.size(); ++iz) {
      SweepRow& row = rows[ia * zs.size() + iz];
      row.alpha = alphas[ia];
      row.z_re = zs[iz];
      row.z_im = 0.0;
    }
  }

  parallel_for(rows.size(), [&](std::size_t i) {
    SweepRow& row = rows[i];
    try {
      const MassProfile profile =
          spec.family == SweepSpec::Family::Cosh
              ? MassProfile::cosh_mass(row.alpha)
              : MassProfile::rational_mass(row.alpha);
      const Wavefunction psi =
          coherent_state(profile, cdouble(row.z_re, row.z_im));
      row.report = moments(profile, psi, spec.cfg);
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
  });
  return rows;
}

void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                     std::ostream& out) {
  out << "family,alpha,z_re,z_im,mean_x,var_x,mean_p,var_p,product,"
         "sx_var,sp_var,sx_std,sp_std,quad_err\n";
  char buf[512];
  for (const SweepRow& row : rows) {
    const MomentReport& r = row.report;
    if (row.ok) {
      std::snprintf(buf, sizeof(buf),
                    "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                    "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    family_name(spec.family), row.alpha, row.z_re, row.z_im,
                    r.mean_x, r.var_x, r.mean_p, r.var_p, r.product, r.sx_var,
                    r.sp_var, r.sx_std, r.sp_std, r.quad_err);
    } else {
      std::snprintf(buf, sizeof(buf),
                    "%s,%.17g,%.17g,%.17g,nan,nan,nan,nan,nan,nan,nan,nan,"
                    "nan,nan\n",
                    family_name(spec.family), row.alpha, row.z_re, row.z_im);
    }
    out << buf;
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_list(const std::string& text, const std::string& ctx) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw parse_error(ctx + ": bad number '" + item + "'");
    }
    vals.push_back(v);
  }
  if (vals.empty()) throw parse_error(ctx + ": empty list");
  return vals;
}

std::vector<double> parse_range(const std::string& text,
                                const std::string& ctx) {
  // start:stop:step, stop inclusive up to a half-step slack.
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
      !(step > 0.0) || stop < start) {
    throw parse_error(ctx + ": expected start:stop:step with step > 0");
  }
  std::vector<double> vals;
  const int n = static_cast<int>(std::floor((stop - start) / step + 0.5)) + 1;
  for (int i = 0; i < n; ++i) {
    const double v = start + i * step;
    if (v > stop + 0.5 * step) break;
    vals.push_back(v);
  }
  return vals;
}

}  // namespace

SweepSpec parse_sweep_spec(std::istream& in, const std::string& source_name) {
  SweepSpec spec;
  bool have_family = false, have_alphas = false, have_z = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    std::ostringstream ctx;
    ctx << source_name << ":" << lineno;
    if (eq == std::string::npos) {
      throw parse_error(ctx.str() + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "family") {
      if (value == "cosh") {
        spec.family = SweepSpec::Family::Cosh;
      } else if (value == "rational") {
        spec.family = SweepSpec::Family::Rational;
      } else {
        throw parse_error(ctx.str() + ": unknown family '" + value + "'");
      }
      have_family = true;
    } else if (key == "alphas") {
      spec.alphas = parse_list(value, ctx.str());
      have_alphas = true;
    } else if (key == "z") {
      spec.z_values = parse_range(value, ctx.str());
      have_z = true;
    } else if (key == "z_values") {
      spec.z_values = parse_list(value, ctx.str());
      have_z = true;
    } else if (key == "abs_tol") {
      spec.cfg.abs_tol = std::stod(value);
    } else if (key == "rel_tol") {
      spec.cfg.rel_tol = std::stod(value);
    } else if (key == "max_depth") {
      spec.cfg.max_depth = std::stoi(value);
    } else if (key == "domain") {
      double lo = 0, hi = 0;
      if (std::sscanf(value.c_str(), "%lf:%lf", &lo, &hi) != 2 || hi <= lo) {
        throw parse_error(ctx.str() + ": expected domain = lo:hi");
      }
      spec.cfg.domain_lo = lo;
      spec.cfg.domain_hi = hi;
    } else {
      throw parse_error(ctx.str() + ": unknown key '" + key + "'");
    }
  }
  if (!have_family || !have_alphas || !have_z) {
    throw parse_error(source_name +
                      ": sweep spec needs family, alphas and z (or z_values)");
  }
  spec.validate();
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open file");
  return parse_sweep_spec(in, path);
}

const char* family_name(SweepSpec::Family family) {
  return family == SweepSpec::Family::Cosh ? "cosh" : "rational";
}

}  // namespace emho
