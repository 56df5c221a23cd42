#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vlaser/model/builders.hpp"

namespace vlaser {

enum class ScanParam { Delta2, Delta3, Omega2, Omega3, Nu2, Nu3 };

ScanParam scan_param_from_name(const std::string& name);
const char* scan_param_name(ScanParam p);
void apply_scan_param(ModelParams& p, ScanParam which, double value);

struct ScanAxis {
  ScanParam param;
  std::vector<double> grid;
};

// Steady inversion <sigma_22> - <sigma_11> of the single driven atom on the
// outer product of the two grids; out(i, j) belongs to
// (axis1.grid[i], axis2.grid[j]). Each cell is an independent steady-state
// solve (no warm starting).
RMatrix inversion_scan(const ModelParams& p, const ScanAxis& axis1, const ScanAxis& axis2,
                       int workers = 1);

// Steady populations of the single driven atom: (<s11>, <s22>, <s33>).
struct Populations {
  double p11, p22, p33;
  double inversion_narrow() const { return p22 - p11; }
  double inversion_broad() const { return p33 - p11; }
};
Populations steady_populations(const ModelParams& p);

// First time at which observable(rho(t)) reaches 0.95 * steady_value on a
// geometric grid, bisection-refined to 1e-3 relative. slow_rate sets the
// initial bracketing scale.
double t95_crossing(const Superoperator& lv, const DensityMatrix& rho0,
                    const std::function<double(const DensityMatrix&)>& observable,
                    double steady_value, double slow_rate);

// First time at which the inversion reaches 95% of its steady-state value,
// bisection-refined to 1e-3 relative. rho0 defaults to the ground state.
double t95(const ModelParams& p, const DensityMatrix* rho0 = nullptr);

}  // namespace vlaser
