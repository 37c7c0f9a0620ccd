// Canonical monomials of the free anticommutative magma: binary trees with
// variable leaves, normalized so that every internal node has left < right
// (swapping costs a sign, equal operands vanish). Total order is degree first,
// then leaves by id, then (left, right) recursively.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cdalg {

class Word {
public:
  Word() = default;

  static Word leaf(int var) {
    Word w;
    w.n_ = std::make_shared<const Node>(Node{var, nullptr, nullptr, 1});
    return w;
  }

  // antisymmetric product of two canonical words: sign in {-1, 0, +1}; sign 0
  // (a square) returns an empty word
  static std::pair<int, Word> mul(const Word& a, const Word& b) {
    const int c = cmp(a, b);
    if (c == 0) return {0, Word()};
    Word w;
    if (c < 0)
      w.n_ = std::make_shared<const Node>(Node{-1, a.n_, b.n_, a.degree() + b.degree()});
    else
      w.n_ = std::make_shared<const Node>(Node{-1, b.n_, a.n_, a.degree() + b.degree()});
    return {c < 0 ? 1 : -1, w};
  }

  bool empty() const { return n_ == nullptr; }
  int degree() const { return n_->deg; }
  bool is_leaf() const { return n_->var >= 0; }
  int var() const { return n_->var; }
  Word left() const { return Word(n_->l); }
  Word right() const { return Word(n_->r); }

  static int cmp(const Word& a, const Word& b) {
    if (a.n_ == b.n_) return 0;
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (a.is_leaf()) return a.var() < b.var() ? -1 : (a.var() == b.var() ? 0 : 1);
    if (int c = cmp(a.left(), b.left()); c != 0) return c;
    return cmp(a.right(), b.right());
  }

  bool operator==(const Word& o) const { return cmp(*this, o) == 0; }

  void count_vars(std::map<int, int>& mult) const {
    if (is_leaf())
      ++mult[var()];
    else {
      left().count_vars(mult);
      right().count_vars(mult);
    }
  }

  // rebuild after a leaf relabeling; the relabeling can reorder siblings, so
  // the result carries a sign (0 if two siblings collide)
  std::pair<int, Word> rename(const std::map<int, int>& m) const {
    if (is_leaf()) {
      auto it = m.find(var());
      return {1, leaf(it == m.end() ? var() : it->second)};
    }
    auto [sl, l] = left().rename(m);
    auto [sr, r] = right().rename(m);
    auto [s, w] = mul(l, r);
    return {sl * sr * s, w};
  }

  std::string str(const std::function<std::string(int)>& name) const {
    if (is_leaf()) return name(var());
    auto wrap = [&](const Word& w) {
      std::string s = w.str(name);
      return w.is_leaf() ? s : "(" + s + ")";
    };
    return wrap(left()) + wrap(right());
  }

private:
  struct Node {
    int var;  // leaf id, or -1 for an internal node
    std::shared_ptr<const Node> l, r;
    int deg;
  };

  explicit Word(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  std::shared_ptr<const Node> n_;
};

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return Word::cmp(a, b) < 0; }
};

namespace detail {

inline std::vector<Word> multilinear_basis_rec(const std::vector<int>& vars) {
  if (vars.size() == 1) return {Word::leaf(vars[0])};
  std::vector<Word> out;
  const size_t k = vars.size() - 1;  // vars[0] stays in the left part of the split
  for (unsigned mask = 0; mask + 1 < (1u << k); ++mask) {
    std::vector<int> p{vars[0]}, q;
    for (size_t i = 0; i < k; ++i) (mask >> i & 1u ? p : q).push_back(vars[i + 1]);
    for (const auto& u : multilinear_basis_rec(p))
      for (const auto& v : multilinear_basis_rec(q)) out.push_back(Word::mul(u, v).second);
  }
  return out;
}

}  // namespace detail

// all canonical monomials that are multilinear in the given distinct variables;
// count obeys T(n) = (2n-3)!!
inline std::vector<Word> multilinear_basis(std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  auto words = detail::multilinear_basis_rec(vars);
  std::sort(words.begin(), words.end(), WordLess{});
  return words;
}

}  // namespace cdalg
