#pragma once

#include <map>
#include <optional>

#include "vlaser/cumulant/expr.hpp"

namespace vlaser::cumulant {

// Reference to a stored moment; conjugated references resolve through the
// stored representative (conjugates are never integrated separately).
struct MomentRef {
  int index = 0;
  bool conj = false;
  auto operator<=>(const MomentRef&) const = default;
};

struct PolyTerm {
  CRational coef;
  Monomial params;
  std::vector<MomentRef> refs;  // sorted, degree <= 3 after closure
};
using Polynomial = std::vector<PolyTerm>;

// One Lindblad channel of the symbolic model. Individual channels act atom
// by atom (their dissipator vanishes on moments not containing that atom);
// collective channels use one shared jump operator, which for any given
// moment truncates exactly to the moment's own sites.
struct JumpSpec {
  OpExpr mode_part;      // e.g. a for cavity decay, a'a for the shared-frame nu2 part
  OpExpr atom_template;  // written for atom label 1; empty if none
  Sym rate;
  bool collective = false;
};

struct SymbolicModel {
  int n_levels = 3;
  bool has_mode = false;
  OpExpr h_mode;  // mode-only Hamiltonian part
  OpExpr h_atom;  // per-atom Hamiltonian template (atom label 1), incl. mode coupling
  std::vector<JumpSpec> jumps;
};

// N driven V-atoms coupled to one cavity mode; the content of Appendix C.1.
SymbolicModel lasing_model(bool with_repump = false);
// driven two-level atom with decay: the optical-Bloch fixture
SymbolicModel two_level_model();

// d<op>/dt as a normal-ordered operator expression (before closure):
// i<[H, op]> + sum_k rate_k/2 <2 J' op J - J'J op - op J'J>. Sums over
// identical atoms reduce to representatives; a fresh atom carries the
// (N - n_sites) multiplicity as an explicit polynomial in N.
OpExpr adjoint_rhs(const SymbolicModel& model, const OpProduct& op);

class MomentRegistry {
 public:
  MomentRef lookup_or_add(const OpProduct& canonical_product,
                          std::vector<OpProduct>* newly = nullptr);
  const std::vector<OpProduct>& moments() const { return moments_; }
  OpProduct resolve(const MomentRef& r) const {
    return r.conj ? adjoint(moments_[r.index]) : moments_[r.index];
  }

 private:
  std::vector<OpProduct> moments_;
  std::map<OpProduct, int> index_;
};

// Second-order cumulant closure: order-3 averages <xyz> split into
// <xy><z> + <xz><y> + <yz><x> - 2<x><y><z>; lower orders pass through.
// New moment classes are registered and reported via `newly`.
Polynomial cumulant_close(const OpExpr& e, MomentRegistry& reg,
                          std::vector<OpProduct>* newly = nullptr);

struct Equation {
  int moment = 0;
  Polynomial rhs;
};

struct EquationSystem {
  SymbolicModel model;
  std::vector<OpProduct> moments;
  std::vector<Equation> equations;

  int size() const { return int(equations.size()); }
  std::optional<MomentRef> find(const OpProduct& p) const;  // by product or its adjoint
  OpProduct resolve(const MomentRef& r) const {
    return r.conj ? adjoint(moments[r.index]) : moments[r.index];
  }
  // one equation per line, canonical term order
  std::string serialize() const;
};

// Transitive closure of the moment hierarchy from the seeds under
// adjoint_rhs + cumulant closure + symmetry reduction.
EquationSystem generate_system(const SymbolicModel& model, const std::vector<OpProduct>& seeds,
                               int cap = 200);

// --- canonical product constructors ---
OpProduct prod_a();
OpProduct prod_ad_a();  // a'a
OpProduct prod_aa();
OpProduct prod_sigma(int i, int j);               // sigma_ij^1
OpProduct prod_a_sigma(int i, int j);             // a sigma_ij^1
OpProduct prod_ad_sigma(int i, int j);            // a' sigma_ij^1
OpProduct prod_pair(int i, int j, int k, int l);  // sigma_ij^1 sigma_kl^2 (exchange-canonical)

// conjugation-class representative: min(p, adjoint(p))
OpProduct conj_class_rep(const OpProduct& p, bool* conjugated = nullptr);

// --- serialization helpers (shared with the golden-file tests) ---
struct ParsedTerm {
  CRational coef;
  Monomial params;
  std::vector<std::string> moment_strs;  // exchange-canonicalized product strings, sorted
};
struct ParsedEquation {
  std::string lhs;  // exchange-canonicalized product string
  std::vector<ParsedTerm> terms;
};
ParsedEquation parse_equation_line(const std::string& line);
OpProduct parse_product(const std::string& bracketed);  // "<a' s12^1>"

}  // namespace vlaser::cumulant
