// The algebra catalog: small solvable/nilpotent examples, sl2, a parametric
// 6-dimensional family, the 7-dimensional simple Malcev algebra obtained from
// the octonions, and free nilpotent anticommutative algebras.
#pragma once

#include <set>

#include "cdalg/algebra.hpp"
#include "cdalg/words.hpp"

namespace cdalg {

template <class F>
Algebra<F> make_abelian(const F& f, int n) {
  Algebra<F> a(f, n, "abelian(" + std::to_string(n) + ")");
  a.validate();
  return a;
}

// e1 e2 = e1: the nonabelian 2-dimensional algebra (Lie)
template <class F>
Algebra<F> make_r2(const F& f) {
  Algebra<F> a(f, 2, "r2");
  a.add_product(0, 1, 0, f.one());
  a.validate();
  return a;
}

template <class F>
Algebra<F> make_r2_plus_line(const F& f) {
  return Algebra<F>::direct_sum(make_r2(f), make_abelian(f, 1), "r2+K");
}

// e1 e2 = e3 central
template <class F>
Algebra<F> make_heisenberg3(const F& f) {
  Algebra<F> a(f, 3, "heisenberg3");
  a.add_product(0, 1, 2, f.one());
  a.validate();
  return a;
}

// basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
template <class F>
Algebra<F> make_sl2(const F& f) {
  Algebra<F> a(f, 3, "sl2");
  a.add_product(0, 1, 1, f.from_int(2));
  a.add_product(0, 2, 2, f.from_int(-2));
  a.add_product(1, 2, 0, f.one());
  a.validate();
  return a;
}

// 6-dimensional family: e1 e2 = e4, e1 e3 = e5, e2 e3 = alpha e6, e4 e5 = e6
template <class F>
Algebra<F> make_b61(const F& f, const typename F::Elem& alpha) {
  Algebra<F> a(f, 6, "b61(" + f.str(alpha) + ")");
  a.add_product(0, 1, 3, f.one());
  a.add_product(0, 2, 4, f.one());
  a.add_product(1, 2, 5, alpha);
  a.add_product(3, 4, 5, f.one());
  a.validate();
  return a;
}

namespace detail {

// Cayley-Dickson doubling with mu = -1 at every level, over the integers:
// (a1,a2)(b1,b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1)).
// Conjugation negates every coordinate except the real one.
using IVec = std::vector<long long>;

inline IVec cd_conj(IVec a) {
  for (size_t i = 1; i < a.size(); ++i) a[i] = -a[i];
  return a;
}

inline IVec cd_mul(const IVec& a, const IVec& b) {
  const size_t n = a.size();
  if (n == 1) return {a[0] * b[0]};
  const size_t h = n / 2;
  IVec a1(a.begin(), a.begin() + h), a2(a.begin() + h, a.end());
  IVec b1(b.begin(), b.begin() + h), b2(b.begin() + h, b.end());
  IVec first = cd_mul(a1, b1);
  IVec corr = cd_mul(cd_conj(b2), a2);
  for (size_t i = 0; i < h; ++i) first[i] -= corr[i];
  IVec second = cd_mul(b2, a1);
  IVec tail = cd_mul(a2, cd_conj(b1));
  for (size_t i = 0; i < h; ++i) second[i] += tail[i];
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

inline IVec cd_unit(size_t dim, size_t i) {
  IVec v(dim, 0);
  v[i] = 1;
  return v;
}

}  // namespace detail

// imaginary octonions under the commutator [a,b] = ab - ba: the 7-dimensional
// simple (non-Lie) Malcev algebra
template <class F>
Algebra<F> make_malcev7(const F& f) {
  Algebra<F> a(f, 7, "malcev7");
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      auto ei = detail::cd_unit(8, i + 1), ej = detail::cd_unit(8, j + 1);
      auto prod = detail::cd_mul(ei, ej);
      auto back = detail::cd_mul(ej, ei);
      for (size_t t = 0; t < 8; ++t) prod[t] -= back[t];
      if (prod[0] != 0) throw algebra_error("octonion commutator left the imaginary part");
      for (int k = 0; k < 7; ++k)
        if (prod[k + 1] != 0) a.add_product(i, j, k, f.from_int(prod[k + 1]));
    }
  a.validate();
  return a;
}

// canonical word basis of the free anticommutative algebra on `gens`
// generators, truncated at nilpotency class `cls`
inline std::vector<Word> free_word_basis(int gens, int cls) {
  std::vector<std::vector<Word>> by_deg(cls + 1);
  for (int v = 0; v < gens; ++v) by_deg[1].push_back(Word::leaf(v));
  for (int d = 2; d <= cls; ++d) {
    std::set<Word, WordLess> words;
    for (int a = 1; a * 2 <= d; ++a)
      for (const auto& u : by_deg[a])
        for (const auto& v : by_deg[d - a]) {
          auto [s, w] = Word::mul(u, v);
          if (s != 0) words.insert(w);
        }
    by_deg[d].assign(words.begin(), words.end());
  }
  std::vector<Word> all;
  for (int d = 1; d <= cls; ++d) all.insert(all.end(), by_deg[d].begin(), by_deg[d].end());
  return all;
}

// dimension of each graded component (index 1..cls), from enumeration
inline std::vector<int> free_degree_dims(int gens, int cls) {
  std::vector<int> dims(cls + 1, 0);
  for (const auto& w : free_word_basis(gens, cls)) ++dims[w.degree()];
  return dims;
}

template <class F>
Algebra<F> make_free_anticommutative(const F& f, int gens, int cls) {
  if (gens < 1 || cls < 1) throw algebra_error("free algebra needs gens >= 1, class >= 1");
  auto words = free_word_basis(gens, cls);
  std::map<Word, int, WordLess> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = int(i);
  Algebra<F> a(f, int(words.size()),
               "free(" + std::to_string(gens) + "," + std::to_string(cls) + ")");
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j) {
      if (words[i].degree() + words[j].degree() > cls) continue;
      auto [s, w] = Word::mul(words[i], words[j]);
      if (s == 0) continue;
      a.add_product(int(i), int(j), index.at(w), s < 0 ? f.from_int(-1) : f.one());
    }
  a.validate();
  return a;
}

}  // namespace cdalg
