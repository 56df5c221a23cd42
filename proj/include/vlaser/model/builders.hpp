#pragma once

#include <utility>
#include <vector>

#include "vlaser/core/liouvillian.hpp"
#include "vlaser/model/params.hpp"

namespace vlaser {

struct SystemDef {
  Operator hamiltonian;
  std::vector<LindbladTerm> terms;
};

// Atomic basis ordering: |1> = 0, |2> = 1, |3> = 2.
// H = sum_{i=2,3} -Delta_i sigma_ii + Omega_i (sigma_i1 + sigma_1i)
// decay (sigma_1i, Gamma_i), dephasing (sigma_ii, nu_i), repump (sigma_32, Gamma_23).
SystemDef build_single_atom(const ModelParams& p);

// N = 1 exact atom-cavity system on [3, n_fock]:
// H = -Delta_c a'a + g (a' sigma_12 + a sigma_21) + single-atom part.
// Cavity photons leak at rate 2*kappa, i.e. the jump term is
// kappa (2 a rho a' - a'a rho - rho a'a) exactly as the model defines it.
// The nu_2 dephasing uses the composite jump operator (a'a + sigma_22)
// of the shared atom-cavity rotating frame.
SystemDef build_atom_cavity_exact(const ModelParams& p, int n_fock);

// Steady state with automatic Fock truncation: grows n_fock until the top two
// Fock levels hold < 1e-6 population and <n> + 5 sqrt(<n>) < cutoff.
DensityMatrix atom_cavity_steady_state(const ModelParams& p, int n_fock_start = 6,
                                       int n_fock_max = 40, int* n_fock_used = nullptr);

// sigma_ij as |i><j| with 1-based level labels, embedded at site 0.
Operator atomic_op(const HilbertSpace& space, int i, int j);
Operator cavity_op(const HilbertSpace& space);  // annihilation operator a

}  // namespace vlaser
