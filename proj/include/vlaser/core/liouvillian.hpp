#pragma once

#include <vector>

#include "vlaser/core/operator.hpp"

namespace vlaser {

// Dense matrix L with vec(rho_dot) = L vec(rho), column-stacking convention.
struct Superoperator {
  HilbertSpace space;
  CMatrix mat;  // d^2 x d^2

  int state_dim() const { return space.dim(); }
};

// L = -i[H, .] + sum_k rate_k/2 (2 J rho J' - J'J rho - rho J'J)
Superoperator liouvillian(const Operator& h, const std::vector<LindbladTerm>& terms);

// Null vector of L by shifted-inverse block iteration, Hermitized and
// trace-normalized. Throws if the zero eigenvalue is not isolated.
DensityMatrix steady_state(const Superoperator& lv);

// Adaptive TR-BDF2 propagation of the linear master equation; returns the
// state at each requested time. t_grid must be strictly increasing, >= 0.
std::vector<DensityMatrix> time_evolve(const Superoperator& lv, const DensityMatrix& rho0,
                                       const std::vector<double>& t_grid);

// Single-state convenience: evolve to one time point.
DensityMatrix evolve_to(const Superoperator& lv, const DensityMatrix& rho0, double t);

// Propagate an arbitrary (non-density) matrix under the same generator,
// sampling tr(weight * X(t)) on a uniform grid. Used for quantum-regression
// two-time correlation functions.
CVector evolve_weighted_trace(const Superoperator& lv, const CMatrix& x0, const CMatrix& weight,
                              double dt, int n_steps);

}  // namespace vlaser
