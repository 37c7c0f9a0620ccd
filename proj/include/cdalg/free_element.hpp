// Elements of the free anticommutative algebra over a field: finite linear
// combinations of canonical words. Multilinearization (polarization) lives
// here; it is what turns an identity with repeated variables into the linear
// data the rest of the engine consumes. Valid in char 0 and char >= 5 for the
// degrees used here (variable multiplicities stay below the characteristic).
#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdalg/fields.hpp"
#include "cdalg/words.hpp"

namespace cdalg {

struct identity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
class FreeElement {
public:
  using Elem = typename F::Elem;
  using Terms = std::map<Word, Elem, WordLess>;

  FreeElement() = default;

  static FreeElement zero() { return FreeElement(); }

  static FreeElement variable(const F& f, int v) {
    FreeElement e;
    e.terms_[Word::leaf(v)] = f.one();
    return e;
  }

  static FreeElement monomial(const F& f, const Word& w, const Elem& c) {
    FreeElement e;
    if (!f.is_zero(c)) e.terms_[w] = c;
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FreeElement add(const F& f, const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.accum(f, w, c);
    return r;
  }

  FreeElement sub(const F& f, const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.accum(f, w, f.neg(c));
    return r;
  }

  FreeElement scale(const F& f, const Elem& c) const {
    FreeElement r;
    if (f.is_zero(c)) return r;
    for (const auto& [w, x] : terms_) r.terms_[w] = f.mul(c, x);
    return r;
  }

  FreeElement neg(const F& f) const { return scale(f, f.neg(f.one())); }

  static FreeElement product(const F& f, const FreeElement& a, const FreeElement& b) {
    FreeElement r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        auto [s, w] = Word::mul(wa, wb);
        if (s == 0) continue;
        auto c = f.mul(ca, cb);
        r.accum(f, w, s < 0 ? f.neg(c) : c);
      }
    return r;
  }

  // J(x,y,z) = (xy)z + (zx)y + (yz)x
  static FreeElement jacobiator(const F& f, const FreeElement& x, const FreeElement& y,
                                const FreeElement& z) {
    auto t1 = product(f, product(f, x, y), z);
    auto t2 = product(f, product(f, z, x), y);
    auto t3 = product(f, product(f, y, z), x);
    return t1.add(f, t2).add(f, t3);
  }

  std::set<int> variables() const {
    std::set<int> vs;
    for (const auto& [w, c] : terms_) {
      std::map<int, int> m;
      w.count_vars(m);
      for (const auto& [v, k] : m) vs.insert(v);
    }
    return vs;
  }

  // multidegree shared by every monomial; throws if the element mixes
  // multidegrees (such an "identity" has no single polarization)
  std::map<int, int> multidegree() const {
    if (terms_.empty()) return {};
    std::map<int, int> first;
    terms_.begin()->first.count_vars(first);
    for (const auto& [w, c] : terms_) {
      std::map<int, int> m;
      w.count_vars(m);
      if (m != first) throw identity_error("inhomogeneous identity: monomials differ in multidegree");
    }
    return first;
  }

  bool is_multilinear() const {
    auto md = multidegree();
    for (const auto& [v, k] : md)
      if (k != 1) return false;
    return true;
  }

  FreeElement rename(const F& f, const std::map<int, int>& m) const {
    FreeElement r;
    for (const auto& [w, c] : terms_) {
      auto [s, nw] = w.rename(m);
      if (s == 0) continue;
      r.accum(f, nw, s < 0 ? f.neg(c) : c);
    }
    return r;
  }

  // replaces every occurrence of variable v (all at once) by repl
  FreeElement substitute(const F& f, int v, const FreeElement& repl) const {
    FreeElement r;
    for (const auto& [w, c] : terms_) r = r.add(f, subst_word(f, w, v, repl).scale(f, c));
    return r;
  }

  // coordinates with respect to a multilinear basis
  std::vector<Elem> vectorize(const F& f, const std::vector<Word>& basis) const {
    std::vector<Elem> coords(basis.size(), f.zero());
    std::map<Word, int, WordLess> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);
    for (const auto& [w, c] : terms_) {
      auto it = index.find(w);
      if (it == index.end()) throw identity_error("monomial outside the target basis");
      coords[it->second] = c;
    }
    return coords;
  }

  std::string str(const F& f, const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      auto cs = f.str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      out += (neg ? cs.substr(1) : cs) + "*" + w.str(name);
    }
    return out;
  }

private:
  Terms terms_;

  void accum(const F& f, const Word& w, const Elem& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!f.is_zero(c)) terms_[w] = c;
      return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) terms_.erase(it);
  }

  static FreeElement subst_word(const F& f, const Word& w, int v, const FreeElement& repl) {
    if (w.is_leaf()) {
      if (w.var() == v) return repl;
      return variable(f, w.var());
    }
    return product(f, subst_word(f, w.left(), v, repl), subst_word(f, w.right(), v, repl));
  }
};

// Full polarization of a homogeneous element. A variable of multiplicity k is
// replaced by a sum of k fresh variables and only the component multilinear in
// all of them is kept; multiplicity-1 variables keep their ids. Fresh ids are
// allocated past the largest id in use, in variable order. Already-multilinear
// input comes back unchanged.
template <class F>
FreeElement<F> multilinearize_one(const F& f, const FreeElement<F>& e) {
  if (e.is_zero()) return e;
  auto md = e.multidegree();
  int next = md.rbegin()->first + 1;
  auto result = e;
  for (const auto& [v, k] : md) {
    if (k == 1) continue;
    FreeElement<F> sum;
    std::vector<int> fresh;
    for (int t = 0; t < k; ++t) {
      fresh.push_back(next);
      sum = sum.add(f, FreeElement<F>::variable(f, next));
      ++next;
    }
    result = result.substitute(f, v, sum);
    // keep only the terms linear in each fresh variable
    FreeElement<F> filtered;
    for (const auto& [w, c] : result.terms()) {
      std::map<int, int> m;
      w.count_vars(m);
      bool linear = true;
      for (int fv : fresh)
        if (auto it = m.find(fv); it == m.end() || it->second != 1) {
          linear = false;
          break;
        }
      if (linear) filtered = filtered.add(f, FreeElement<F>::monomial(f, w, c));
    }
    result = filtered;
  }
  return result;
}

// list form: exactly one component for a homogeneous identity
template <class F>
std::vector<FreeElement<F>> multilinearize(const F& f, const FreeElement<F>& e) {
  return {multilinearize_one(f, e)};
}

}  // namespace cdalg
