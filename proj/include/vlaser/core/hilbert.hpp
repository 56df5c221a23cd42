#pragma once

#include <vector>

#include "vlaser/core/error.hpp"
#include "vlaser/core/types.hpp"

namespace vlaser {

// Ordered tensor factors of the composed state space. By convention the
// cavity mode, when present, is the last factor; n_fock is its dimension
// (photon-number cutoff + 1).
struct HilbertSpace {
  std::vector<int> factors;
  int n_fock = 0;  // 0 if no cavity factor

  HilbertSpace() = default;
  explicit HilbertSpace(std::vector<int> f, int nf = 0) : factors(std::move(f)), n_fock(nf) {
    require(!factors.empty(), "HilbertSpace: no factors");
    for (std::size_t s = 0; s < factors.size(); ++s)
      require(factors[s] >= 2, "HilbertSpace: factor ", s, " has dimension ", factors[s],
              " (must be >= 2)");
    if (n_fock > 0) {
      require(n_fock >= 2, "HilbertSpace: n_fock = ", n_fock, " (must be >= 2)");
      require(factors.back() == n_fock, "HilbertSpace: last factor ", factors.back(),
              " does not match n_fock ", n_fock);
    }
  }

  int dim() const {
    int d = 1;
    for (int f : factors) d *= f;
    return d;
  }

  bool operator==(const HilbertSpace& o) const {
    return factors == o.factors && n_fock == o.n_fock;
  }
};

inline HilbertSpace atom_space(int levels = 3) { return HilbertSpace({levels}); }

inline HilbertSpace atom_cavity_space(int levels, int n_fock) {
  return HilbertSpace({levels, n_fock}, n_fock);
}

// --- local operator builders ---

inline CMatrix identity_local(int d) { return CMatrix::Identity(d, d); }

// |i><j| on a d-level system, 0-indexed.
inline CMatrix transition_local(int d, int i, int j) {
  require(i >= 0 && i < d && j >= 0 && j < d, "transition_local: index (", i, ",", j,
          ") out of range for dimension ", d);
  CMatrix m = CMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

inline CMatrix destroy_local(int n_fock) {
  CMatrix a = CMatrix::Zero(n_fock, n_fock);
  for (int n = 1; n < n_fock; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

inline CMatrix number_local(int n_fock) {
  CMatrix n = CMatrix::Zero(n_fock, n_fock);
  for (int k = 0; k < n_fock; ++k) n(k, k) = double(k);
  return n;
}

// I (x) ... (x) local_op (x) ... (x) I in composition order.
inline CMatrix embed(const HilbertSpace& space, const CMatrix& local_op, int site) {
  require(site >= 0 && site < int(space.factors.size()), "embed: site ", site,
          " out of range (", space.factors.size(), " factors)");
  require(local_op.rows() == local_op.cols() && int(local_op.rows()) == space.factors[site],
          "embed: operator is ", local_op.rows(), "x", local_op.cols(), " but factor ", site,
          " has dimension ", space.factors[site]);
  CMatrix out = CMatrix::Identity(1, 1);
  for (int s = 0; s < int(space.factors.size()); ++s) {
    if (s == site)
      out = kron(out, local_op);
    else
      out = kron(out, identity_local(space.factors[s]));
  }
  return out;
}

}  // namespace vlaser
