#include "vlaser/cumulant/expr.hpp"

#include <algorithm>
#include <map>

namespace vlaser::cumulant {

namespace {
constexpr const char* kSymNames[kNumSyms] = {"Dc", "D2", "D3", "O2",  "O3", "G2", "G3",
                                             "n2", "n3", "k",  "g",   "N",  "G23"};
}

const char* sym_name(Sym s) { return kSymNames[int(s)]; }

Sym sym_from_name(const std::string& name) {
  for (int k = 0; k < kNumSyms; ++k)
    if (name == kSymNames[k]) return Sym(k);
  raise("unknown parameter symbol '", name, "'");
}

std::string Monomial::str() const {
  std::string out;
  for (int k = 0; k < kNumSyms; ++k) {
    for (int p = 0; p < pw[k]; ++p) {
      if (!out.empty()) out += " ";
      out += kSymNames[k];
    }
  }
  return out;
}

std::string OpProduct::str() const {
  std::string out = "<";
  bool first = true;
  auto put = [&](const std::string& tok) {
    if (!first) out += " ";
    out += tok;
    first = false;
  };
  for (int k = 0; k < n_dag; ++k) put("a'");
  for (int k = 0; k < n_a; ++k) put("a");
  for (const auto& f : atoms)
    put("s" + std::to_string(f.i) + std::to_string(f.j) + "^" + std::to_string(f.atom));
  if (first) put("1");
  return out + ">";
}

OpProduct exchange_canonical(OpProduct p) {
  std::sort(p.atoms.begin(), p.atoms.end(),
            [](const AtomFactor& a, const AtomFactor& b) {
              return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });
  for (std::size_t k = 0; k < p.atoms.size(); ++k) p.atoms[k].atom = std::int8_t(k + 1);
  return p;
}

OpProduct adjoint(const OpProduct& p) {
  OpProduct q;
  q.n_dag = p.n_a;
  q.n_a = p.n_dag;
  q.atoms = p.atoms;
  for (auto& f : q.atoms) std::swap(f.i, f.j);
  return exchange_canonical(std::move(q));
}

void merge_terms(OpExpr& e) {
  std::map<std::pair<OpProduct, Monomial>, CRational> acc;
  for (const auto& t : e) acc[{t.ops, t.params}] = acc[{t.ops, t.params}] + t.coef;
  e.clear();
  for (const auto& [key, c] : acc)
    if (!c.is_zero()) e.push_back(OpTerm{c, key.second, key.first});
}

OpExpr normal_order_string(const std::vector<Factor>& seq, const CRational& coef,
                           const Monomial& params, int n_levels) {
  if (coef.is_zero()) return {};

  // separate commuting sectors, preserving order within each
  std::vector<std::int8_t> bosons;  // +1 create, -1 annihilate
  std::map<std::int8_t, AtomFactor> merged;  // same-atom contraction left to right
  for (const Factor& f : seq) {
    if (f.kind == Factor::BosonCreate) {
      bosons.push_back(+1);
    } else if (f.kind == Factor::BosonAnnihilate) {
      bosons.push_back(-1);
    } else {
      auto it = merged.find(f.at.atom);
      if (it == merged.end()) {
        merged[f.at.atom] = f.at;
      } else {
        // sigma_ij sigma_kl = delta_jk sigma_il
        if (it->second.j != f.at.i) return {};
        it->second.j = f.at.j;
      }
    }
  }

  // bosonic normal ordering by [a, a'] = 1 rewriting
  std::map<std::pair<int, int>, std::int64_t> boson_terms;  // (n_dag, n_a) -> multiplicity
  {
    std::vector<std::pair<std::vector<std::int8_t>, std::int64_t>> work{{bosons, 1}};
    while (!work.empty()) {
      auto [s, mult] = work.back();
      work.pop_back();
      bool reduced = false;
      for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        if (s[k] == -1 && s[k + 1] == +1) {
          std::vector<std::int8_t> swapped = s;
          std::swap(swapped[k], swapped[k + 1]);
          std::vector<std::int8_t> contracted;
          contracted.reserve(s.size() - 2);
          for (std::size_t m = 0; m < s.size(); ++m)
            if (m != k && m != k + 1) contracted.push_back(s[m]);
          work.push_back({std::move(swapped), mult});
          work.push_back({std::move(contracted), mult});
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        int nd = 0, na = 0;
        for (auto b : s) (b > 0 ? nd : na)++;
        boson_terms[{nd, na}] += mult;
      }
    }
  }

  // sigma_11 elimination: 1 - sum_{l >= 2} sigma_ll, expanded across atoms
  struct Branch {
    std::vector<AtomFactor> atoms;
    std::int64_t sign = 1;
  };
  std::vector<Branch> branches{{{}, 1}};
  for (const auto& [atom, f] : merged) {
    std::vector<Branch> next;
    for (const auto& br : branches) {
      if (f.i == 1 && f.j == 1) {
        Branch keep = br;  // identity branch
        next.push_back(keep);
        for (int l = 2; l <= n_levels; ++l) {
          Branch b = br;
          b.atoms.push_back(AtomFactor{atom, std::int8_t(l), std::int8_t(l)});
          b.sign = -br.sign;
          next.push_back(b);
        }
      } else {
        Branch b = br;
        b.atoms.push_back(f);
        next.push_back(b);
      }
    }
    branches = std::move(next);
  }

  OpExpr out;
  for (const auto& [bt, bmult] : boson_terms) {
    for (const auto& br : branches) {
      OpTerm t;
      t.coef = coef * CRational::real(bmult * br.sign);
      t.params = params;
      t.ops.n_dag = std::int8_t(bt.first);
      t.ops.n_a = std::int8_t(bt.second);
      t.ops.atoms = br.atoms;
      out.push_back(std::move(t));
    }
  }
  merge_terms(out);
  return out;
}

namespace {

std::vector<Factor> product_factors(const OpProduct& p) {
  std::vector<Factor> seq;
  for (int k = 0; k < p.n_dag; ++k) seq.push_back(Factor::create());
  for (int k = 0; k < p.n_a; ++k) seq.push_back(Factor::annihilate());
  for (const auto& f : p.atoms) seq.push_back(Factor::sigma(f.atom, f.i, f.j));
  return seq;
}

}  // namespace

OpExpr expr_create() { return {OpTerm{CRational::real(1), Monomial::one(), OpProduct{1, 0, {}}}}; }
OpExpr expr_annihilate() {
  return {OpTerm{CRational::real(1), Monomial::one(), OpProduct{0, 1, {}}}};
}
OpExpr expr_sigma(int atom, int i, int j) {
  require(!(i == 1 && j == 1), "expr_sigma: sigma_11 is eliminated, build it as 1 - sum sigma_ll");
  OpProduct p;
  p.atoms.push_back(AtomFactor{std::int8_t(atom), std::int8_t(i), std::int8_t(j)});
  return {OpTerm{CRational::real(1), Monomial::one(), std::move(p)}};
}

OpExpr scaled(const OpExpr& e, const CRational& c, const Monomial& m) {
  OpExpr out = e;
  for (auto& t : out) {
    t.coef = t.coef * c;
    t.params = t.params * m;
  }
  merge_terms(out);
  return out;
}

OpExpr add(const OpExpr& a, const OpExpr& b) {
  OpExpr out = a;
  out.insert(out.end(), b.begin(), b.end());
  merge_terms(out);
  return out;
}

OpExpr sub(const OpExpr& a, const OpExpr& b) { return add(a, scaled(b, CRational::real(-1))); }

OpExpr mul(const OpExpr& a, const OpExpr& b, int n_levels) {
  OpExpr out;
  for (const auto& ta : a) {
    std::vector<Factor> fa = product_factors(ta.ops);
    for (const auto& tb : b) {
      std::vector<Factor> seq = fa;
      std::vector<Factor> fb = product_factors(tb.ops);
      seq.insert(seq.end(), fb.begin(), fb.end());
      OpExpr piece =
          normal_order_string(seq, ta.coef * tb.coef, ta.params * tb.params, n_levels);
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  merge_terms(out);
  return out;
}

OpExpr commutator(const OpExpr& a, const OpExpr& b, int n_levels) {
  return sub(mul(a, b, n_levels), mul(b, a, n_levels));
}

OpExpr normal_order(const OpExpr& e, int n_levels) {
  OpExpr out;
  for (const auto& t : e) {
    OpExpr piece = normal_order_string(product_factors(t.ops), t.coef, t.params, n_levels);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  merge_terms(out);
  return out;
}

}  // namespace vlaser::cumulant
