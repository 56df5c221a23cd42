#include "vlaser/model/builders.hpp"

#include <cmath>

namespace vlaser {

Operator atomic_op(const HilbertSpace& space, int i, int j) {
  return Operator(space, embed(space, transition_local(space.factors[0], i - 1, j - 1), 0));
}

Operator cavity_op(const HilbertSpace& space) {
  require(space.n_fock >= 2, "cavity_op: space has no cavity factor");
  int site = int(space.factors.size()) - 1;
  return Operator(space, embed(space, destroy_local(space.n_fock), site));
}

SystemDef build_single_atom(const ModelParams& p) {
  p.validate();
  HilbertSpace space = atom_space(3);
  auto sig = [&](int i, int j) { return embed(space, transition_local(3, i - 1, j - 1), 0); };

  CMatrix h = -p.delta2 * sig(2, 2) - p.delta3 * sig(3, 3) + p.omega2 * (sig(2, 1) + sig(1, 2)) +
              p.omega3 * (sig(3, 1) + sig(1, 3));

  std::vector<LindbladTerm> terms;
  terms.emplace_back(Operator(space, sig(1, 2)), p.gamma2);
  terms.emplace_back(Operator(space, sig(1, 3)), p.gamma3);
  if (p.nu2 > 0) terms.emplace_back(Operator(space, sig(2, 2)), p.nu2);
  if (p.nu3 > 0) terms.emplace_back(Operator(space, sig(3, 3)), p.nu3);
  if (p.gamma23 > 0) terms.emplace_back(Operator(space, sig(3, 2)), p.gamma23);

  return SystemDef{Operator(space, std::move(h)), std::move(terms)};
}

SystemDef build_atom_cavity_exact(const ModelParams& p, int n_fock) {
  p.validate();
  HilbertSpace space = atom_cavity_space(3, n_fock);
  auto sig = [&](int i, int j) { return embed(space, transition_local(3, i - 1, j - 1), 0); };
  CMatrix a = embed(space, destroy_local(n_fock), 1);
  CMatrix ad = a.adjoint();

  CMatrix h = -p.delta_c * (ad * a) + p.g * (ad * sig(1, 2) + a * sig(2, 1)) -
              p.delta2 * sig(2, 2) - p.delta3 * sig(3, 3) + p.omega2 * (sig(2, 1) + sig(1, 2)) +
              p.omega3 * (sig(3, 1) + sig(1, 3));

  std::vector<LindbladTerm> terms;
  terms.emplace_back(Operator(space, a), 2.0 * p.kappa);  // photon loss rate 2 kappa
  terms.emplace_back(Operator(space, sig(1, 2)), p.gamma2);
  terms.emplace_back(Operator(space, sig(1, 3)), p.gamma3);
  if (p.nu2 > 0) terms.emplace_back(Operator(space, ad * a + sig(2, 2)), p.nu2);
  if (p.nu3 > 0) terms.emplace_back(Operator(space, sig(3, 3)), p.nu3);
  if (p.gamma23 > 0) terms.emplace_back(Operator(space, sig(3, 2)), p.gamma23);

  return SystemDef{Operator(space, std::move(h)), std::move(terms)};
}

DensityMatrix atom_cavity_steady_state(const ModelParams& p, int n_fock_start, int n_fock_max,
                                       int* n_fock_used) {
  for (int nf = n_fock_start; nf <= n_fock_max; nf = nf + nf / 2 + 1) {
    SystemDef sys = build_atom_cavity_exact(p, nf);
    DensityMatrix rho = steady_state(liouvillian(sys.hamiltonian, sys.terms));

    // population of the top two Fock layers and mean photon number;
    // composition order atom (x) cavity puts the Fock index fastest
    double tail = 0.0, nbar = 0.0;
    for (int atom = 0; atom < 3; ++atom) {
      for (int n = 0; n < nf; ++n) {
        int idx = atom * nf + n;
        double pop = rho.mat(idx, idx).real();
        nbar += n * pop;
        if (n >= nf - 2) tail += pop;
      }
    }
    if (tail < 1e-6 && nbar + 5.0 * std::sqrt(std::max(nbar, 0.0)) < double(nf)) {
      if (n_fock_used) *n_fock_used = nf;
      return rho;
    }
  }
  raise("atom_cavity_steady_state: Fock cutoff ", n_fock_max,
        " still has tail population >= 1e-6; state too large for the exact oracle");
}

}  // namespace vlaser
