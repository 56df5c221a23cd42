#include "vlaser/model/scans.hpp"

#include <cmath>

#include "vlaser/core/parallel.hpp"

namespace vlaser {

ScanParam scan_param_from_name(const std::string& name) {
  if (name == "Delta2") return ScanParam::Delta2;
  if (name == "Delta3") return ScanParam::Delta3;
  if (name == "Omega2") return ScanParam::Omega2;
  if (name == "Omega3") return ScanParam::Omega3;
  if (name == "nu2") return ScanParam::Nu2;
  if (name == "nu3") return ScanParam::Nu3;
  raise("unknown scan parameter '", name,
        "' (expected Delta2|Delta3|Omega2|Omega3|nu2|nu3)");
}

const char* scan_param_name(ScanParam p) {
  switch (p) {
    case ScanParam::Delta2: return "Delta2";
    case ScanParam::Delta3: return "Delta3";
    case ScanParam::Omega2: return "Omega2";
    case ScanParam::Omega3: return "Omega3";
    case ScanParam::Nu2: return "nu2";
    case ScanParam::Nu3: return "nu3";
  }
  return "?";
}

void apply_scan_param(ModelParams& p, ScanParam which, double value) {
  switch (which) {
    case ScanParam::Delta2: p.delta2 = value; break;
    case ScanParam::Delta3: p.delta3 = value; break;
    case ScanParam::Omega2: p.omega2 = value; break;
    case ScanParam::Omega3: p.omega3 = value; break;
    case ScanParam::Nu2: p.nu2 = value; break;
    case ScanParam::Nu3: p.nu3 = value; break;
  }
}

Populations steady_populations(const ModelParams& p) {
  SystemDef sys = build_single_atom(p);
  DensityMatrix rho = steady_state(liouvillian(sys.hamiltonian, sys.terms));
  return Populations{rho.mat(0, 0).real(), rho.mat(1, 1).real(), rho.mat(2, 2).real()};
}

RMatrix inversion_scan(const ModelParams& p, const ScanAxis& axis1, const ScanAxis& axis2,
                       int workers) {
  require(!axis1.grid.empty() && !axis2.grid.empty(), "inversion_scan: empty grid");
  const std::size_t n1 = axis1.grid.size(), n2 = axis2.grid.size();
  RMatrix out(n1, n2);
  parallel_for(n1 * n2, workers, [&](std::size_t k) {
    std::size_t i = k / n2, j = k % n2;
    ModelParams q = p;
    apply_scan_param(q, axis1.param, axis1.grid[i]);
    apply_scan_param(q, axis2.param, axis2.grid[j]);
    try {
      out(i, j) = steady_populations(q).inversion_narrow();
    } catch (const SimError& e) {
      raise("inversion_scan cell (", i, ",", j, "): ", e.what());
    }
  });
  return out;
}

double t95_crossing(const Superoperator& lv, const DensityMatrix& rho0,
                    const std::function<double(const DensityMatrix&)>& observable,
                    double steady_value, double slow_rate) {
  const double target = 0.95 * steady_value;
  auto value_at = [&](double t) { return observable(evolve_to(lv, rho0, t)); };

  // geometric bracketing on the slow timescale, then bisection
  double t_lo = 0.0, t_hi = 1e-3 / slow_rate;
  double v_hi = value_at(t_hi);
  int guard = 0;
  while (v_hi < target) {
    t_lo = t_hi;
    t_hi *= 1.5;
    v_hi = value_at(t_hi);
    require(++guard < 200, "t95: no crossing found up to t = ", t_hi);
  }
  while ((t_hi - t_lo) > 1e-3 * t_hi) {
    double tm = 0.5 * (t_lo + t_hi);
    if (value_at(tm) >= target)
      t_hi = tm;
    else
      t_lo = tm;
  }
  return t_hi;
}

double t95(const ModelParams& p, const DensityMatrix* rho0_in) {
  SystemDef sys = build_single_atom(p);
  Superoperator lv = liouvillian(sys.hamiltonian, sys.terms);
  DensityMatrix rho_ss = steady_state(lv);
  const double inv_ss = rho_ss.mat(1, 1).real() - rho_ss.mat(0, 0).real();
  require(inv_ss > 0.0, "t95: steady state is not inverted (inversion = ", inv_ss,
          "), t95 undefined");

  DensityMatrix rho0 = rho0_in ? *rho0_in : pure_state(lv.space, 0);
  auto inversion = [](const DensityMatrix& r) {
    return r.mat(1, 1).real() - r.mat(0, 0).real();
  };
  return t95_crossing(lv, rho0, inversion, inv_ss, p.gamma2 + p.gamma23);
}

}  // namespace vlaser
