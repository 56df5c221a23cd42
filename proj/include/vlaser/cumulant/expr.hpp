#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "vlaser/cumulant/rational.hpp"

namespace vlaser::cumulant {

// Model parameter symbols. Numeric binding happens only at integration time.
enum class Sym : int {
  DeltaC,
  Delta2,
  Delta3,
  Omega2,
  Omega3,
  Gamma2,
  Gamma3,
  Nu2,
  Nu3,
  Kappa,
  CoupG,
  AtomN,
  Gamma23,
  Count_
};
inline constexpr int kNumSyms = int(Sym::Count_);

const char* sym_name(Sym s);
Sym sym_from_name(const std::string& name);

// Product of parameter symbols with small integer powers.
struct Monomial {
  std::array<std::int8_t, kNumSyms> pw{};

  static Monomial one() { return Monomial{}; }
  static Monomial of(Sym s, int p = 1) {
    Monomial m;
    m.pw[int(s)] = std::int8_t(p);
    return m;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int k = 0; k < kNumSyms; ++k) m.pw[k] = std::int8_t(a.pw[k] + b.pw[k]);
    return m;
  }
  auto operator<=>(const Monomial&) const = default;
  std::string str() const;
};

// --- operator factors ---

// sigma_{ij} on a given atom; levels are 1-based as in the model
struct AtomFactor {
  std::int8_t atom = 1;
  std::int8_t i = 1, j = 1;
  auto operator<=>(const AtomFactor&) const = default;
};

// One elementary factor in an (unordered) operator string.
struct Factor {
  enum Kind : std::int8_t { BosonCreate, BosonAnnihilate, Atom };
  Kind kind = Atom;
  AtomFactor at;  // valid when kind == Atom

  static Factor create() { return Factor{BosonCreate, {}}; }
  static Factor annihilate() { return Factor{BosonAnnihilate, {}}; }
  static Factor sigma(int atom, int i, int j) {
    return Factor{Atom, AtomFactor{std::int8_t(atom), std::int8_t(i), std::int8_t(j)}};
  }
};

// Normal-ordered canonical product: a'^n_dag a^n_a then at most one sigma per
// atom, sorted by atom label. sigma_11 never appears (eliminated against the
// completeness relation).
struct OpProduct {
  std::int8_t n_dag = 0, n_a = 0;
  std::vector<AtomFactor> atoms;

  int order() const { return n_dag + n_a + int(atoms.size()); }
  bool is_identity() const { return order() == 0; }
  auto operator<=>(const OpProduct&) const = default;
  std::string str() const;  // e.g. <a' a s21^1>
};

// Adjoint product (daggered), exchange-canonicalized.
OpProduct adjoint(const OpProduct& p);

// Relabel atoms to the exchange-symmetric representative: atom factors sorted
// by (i, j) and renumbered 1..m.
OpProduct exchange_canonical(OpProduct p);

struct OpTerm {
  CRational coef;
  Monomial params;
  OpProduct ops;
};

// Flattened, merged sum of canonical terms.
using OpExpr = std::vector<OpTerm>;

// --- construction helpers (single factors, unit coefficient) ---
OpExpr expr_create();                       // a'
OpExpr expr_annihilate();                   // a
OpExpr expr_sigma(int atom, int i, int j);  // sigma_ij^(atom)
OpExpr scaled(const OpExpr& e, const CRational& c, const Monomial& m = Monomial::one());

OpExpr add(const OpExpr& a, const OpExpr& b);
OpExpr sub(const OpExpr& a, const OpExpr& b);
// Operator product; n_levels sets the completeness relation used to
// eliminate sigma_11.
OpExpr mul(const OpExpr& a, const OpExpr& b, int n_levels);
// Commutator [a, b].
OpExpr commutator(const OpExpr& a, const OpExpr& b, int n_levels);

// Canonicalize an arbitrary factor string into a sum of normal-ordered
// products: bosonic [a, a'] = 1 rewriting, same-atom sigma contraction,
// sigma_11 elimination. Atom labels are preserved; exchange relabeling
// happens at the moment layer.
OpExpr normal_order_string(const std::vector<Factor>& seq, const CRational& coef,
                           const Monomial& params, int n_levels);

// Merge like terms, drop zeros, sort canonically.
void merge_terms(OpExpr& e);

// Re-canonicalization of an expression (idempotent on canonical input).
OpExpr normal_order(const OpExpr& e, int n_levels);

}  // namespace vlaser::cumulant
