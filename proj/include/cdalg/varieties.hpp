// Variety membership for anticommutative algebras. Every identity is decided
// through its full multilinearization evaluated on basis tuples, which is
// equivalent to the original identity whenever the characteristic exceeds the
// variable multiplicities (0 or >= 5 here, multiplicities at most 2).
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "cdalg/algebra.hpp"
#include "cdalg/identity_parser.hpp"

namespace cdalg {

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Variety { Lie, BinaryLie, Malcev, Sagle, AlmostLie, CD, JProduct, JSwap, MalcevLinear };

inline constexpr std::array<Variety, 9> all_varieties{
    Variety::Lie,       Variety::BinaryLie, Variety::Malcev,
    Variety::Sagle,     Variety::AlmostLie, Variety::CD,
    Variety::JProduct,  Variety::JSwap,     Variety::MalcevLinear};

inline const char* variety_name(Variety v) {
  switch (v) {
    case Variety::Lie: return "lie";
    case Variety::BinaryLie: return "binary-lie";
    case Variety::Malcev: return "malcev";
    case Variety::Sagle: return "sagle";
    case Variety::AlmostLie: return "almost-lie";
    case Variety::CD: return "cd";
    case Variety::JProduct: return "j-product";
    case Variety::JSwap: return "j-swap";
    case Variety::MalcevLinear: return "malcev-linear";
  }
  return "?";
}

// defining identities; J(x,y,z) = (xy)z + (zx)y + (yz)x
inline const char* variety_source(Variety v) {
  switch (v) {
    case Variety::Lie: return "J(x,y,z) = 0";
    case Variety::BinaryLie: return "((xy)x)y = ((xy)y)x";
    case Variety::Malcev: return "J(x,y,xz) = J(x,y,z)x";
    case Variety::Sagle: return "J(x,y,z)w = J(w,z,xy) + J(w,y,zx) + J(w,x,yz)";
    case Variety::AlmostLie: return "J(x,y,z)w = 0";
    case Variety::CD:
      return "((xy)a)b - ((xy)b)a - ((xa)b)y + ((xb)a)y + ((ya)b)x - ((yb)a)x = 0";
    case Variety::JProduct: return "J(x,y,zw) = 0";
    case Variety::JSwap: return "J(wx,y,z) + J(yz,w,x) = 0";
    case Variety::MalcevLinear:
      return "3J(y,z,wx) = J(x,y,z)w - J(y,z,w)x - 2J(z,w,x)y + 2J(w,x,y)z";
  }
  return "";
}

template <class F>
ParsedIdentity<F> variety_identity(const F& f, Variety v) {
  return parse_identity(f, variety_source(v));
}

template <class F>
struct Witness {
  std::vector<int> tuple;   // basis indices, one per variable in sorted-id order
  Vec<F> value;             // the nonzero evaluation
};

template <class F>
struct SatisfiesResult {
  bool holds = true;
  std::optional<Witness<F>> witness;
};

// evaluate a free element on basis vectors of A chosen per variable
template <class F>
Vec<F> eval_element(const Algebra<F>& A, const FreeElement<F>& e,
                    const std::map<int, int>& assign) {
  const F& f = A.field();
  std::map<Word, Vec<F>, WordLess> memo;
  auto eval_word = [&](auto&& self, const Word& w) -> const Vec<F>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Vec<F> val;
    if (w.is_leaf())
      val = unit_vec(f, A.dim(), assign.at(w.var()));
    else
      val = A.mul(self(self, w.left()), self(self, w.right()));
    return memo.emplace(w, std::move(val)).first->second;
  };
  Vec<F> acc = zero_vec(f, A.dim());
  for (const auto& [w, c] : e.terms()) {
    const auto& v = eval_word(eval_word, w);
    for (int i = 0; i < A.dim(); ++i)
      if (!f.is_zero(v[i])) acc[i] = f.add(acc[i], f.mul(c, v[i]));
  }
  return acc;
}

namespace detail {

template <class F>
bool elements_equal(const F& f, const FreeElement<F>& a, const FreeElement<F>& b) {
  return a.sub(f, b).is_zero();
}

// pairwise-disjoint unordered variable pairs under whose swap the element is
// antisymmetric; evaluation may then be restricted to increasing index pairs
template <class F>
std::vector<std::pair<int, int>> skew_pairs(const F& f, const FreeElement<F>& e,
                                            const std::vector<int>& vars) {
  std::vector<std::pair<int, int>> out;
  std::vector<bool> used(vars.size(), false);
  for (size_t i = 0; i < vars.size(); ++i) {
    if (used[i]) continue;
    for (size_t j = i + 1; j < vars.size(); ++j) {
      if (used[j]) continue;
      std::map<int, int> swap{{vars[i], vars[j]}, {vars[j], vars[i]}};
      if (elements_equal(f, e.rename(f, swap), e.neg(f))) {
        out.emplace_back(int(i), int(j));
        used[i] = used[j] = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

// Decides whether the identity (as a free element equated to zero) holds in A.
// The default path scans all basis tuples in lexicographic order and reports
// the first failure; the pruned path skips tuples ruled out by antisymmetries
// of the multilinearized identity (same verdict, possibly different witness).
template <class F>
SatisfiesResult<F> satisfies_element(const Algebra<F>& A, const FreeElement<F>& ident,
                                     bool pruned = false) {
  const F& f = A.field();
  auto ml = multilinearize_one(f, ident);
  SatisfiesResult<F> res;
  if (ml.is_zero()) return res;
  auto vars_set = ml.variables();
  std::vector<int> vars(vars_set.begin(), vars_set.end());
  const int d = int(vars.size());
  const int n = A.dim();

  std::vector<std::pair<int, int>> skew;
  if (pruned) skew = detail::skew_pairs(f, ml, vars);

  std::vector<int> tuple(d, 0);
  std::map<int, int> assign;
  while (true) {
    bool skip = false;
    for (const auto& [i, j] : skew)
      if (tuple[i] >= tuple[j]) {
        skip = true;
        break;
      }
    if (!skip) {
      for (int i = 0; i < d; ++i) assign[vars[i]] = tuple[i];
      auto val = eval_element(A, ml, assign);
      if (!vec_is_zero(f, val)) {
        res.holds = false;
        res.witness = Witness<F>{tuple, std::move(val)};
        return res;
      }
    }
    int pos = d - 1;
    while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return res;
}

template <class F>
SatisfiesResult<F> satisfies(const Algebra<F>& A, Variety v, bool pruned = false) {
  return satisfies_element(A, variety_identity(A.field(), v).element, pruned);
}

template <class F>
struct VarietyReport {
  std::map<Variety, SatisfiesResult<F>> results;
  bool holds(Variety v) const { return results.at(v).holds; }
};

// all nine verdicts, cross-checked against the known inclusions between the
// varieties; a violated inclusion means a bug, not a mathematical discovery
template <class F>
VarietyReport<F> variety_report(const Algebra<F>& A) {
  VarietyReport<F> rep;
  for (Variety v : all_varieties) rep.results[v] = satisfies(A, v);
  auto implies = [&](Variety a, Variety b) {
    if (rep.holds(a) && !rep.holds(b))
      throw internal_error(std::string("inclusion violated: ") + variety_name(a) + " algebra fails " +
                           variety_name(b));
  };
  for (Variety v : all_varieties) implies(Variety::Lie, v);
  implies(Variety::CD, Variety::BinaryLie);
  implies(Variety::CD, Variety::AlmostLie);
  implies(Variety::Malcev, Variety::BinaryLie);
  implies(Variety::Lie, Variety::Sagle);
  return rep;
}

}  // namespace cdalg
