// Finite-dimensional anticommutative algebras given by structure constants.
// The table is stored sparsely per basis pair; antisymmetry is filled in at
// construction time and re-validated afterwards, so a constructed object is
// always genuinely anticommutative.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdalg/subspace.hpp"

namespace cdalg {

struct algebra_error : std::domain_error {
  using std::domain_error::domain_error;
};

template <class F>
class Algebra {
public:
  using Elem = typename F::Elem;
  using Row = std::vector<std::pair<int, Elem>>;  // sparse product of one basis pair

  Algebra(const F& f, int n, std::string name)
      : f_(f), n_(n), name_(std::move(name)), tab_(size_t(n) * n) {}

  const F& field() const { return f_; }
  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  // e_i e_j += c e_k (and e_j e_i -= c e_k); building block for all constructors
  void add_product(int i, int j, int k, const Elem& c) {
    if (i == j) throw algebra_error("diagonal products must vanish");
    check_index(i);
    check_index(j);
    check_index(k);
    if (f_.is_zero(c)) return;
    accum(i, j, k, c);
    accum(j, i, k, f_.neg(c));
  }

  const Row& table(int i, int j) const { return tab_[size_t(i) * n_ + j]; }

  Elem c(int i, int j, int k) const {
    for (const auto& [kk, cc] : table(i, j))
      if (kk == k) return cc;
    return f_.zero();
  }

  Vec<F> mul_basis(int i, int j) const {
    Vec<F> r = zero_vec(f_, n_);
    for (const auto& [k, cc] : table(i, j)) r[k] = cc;
    return r;
  }

  Vec<F> mul(const Vec<F>& u, const Vec<F>& v) const {
    Vec<F> r = zero_vec(f_, n_);
    for (int i = 0; i < n_; ++i) {
      if (f_.is_zero(u[i])) continue;
      for (int j = 0; j < n_; ++j) {
        if (f_.is_zero(v[j])) continue;
        const auto uv = f_.mul(u[i], v[j]);
        for (const auto& [k, cc] : table(i, j)) r[k] = f_.add(r[k], f_.mul(uv, cc));
      }
    }
    return r;
  }

  Vec<F> jacobiator(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) const {
    auto t = mul(mul(x, y), z);
    t = vec_add(f_, t, mul(mul(z, x), y));
    return vec_add(f_, t, mul(mul(y, z), x));
  }

  bool is_abelian() const {
    for (const auto& row : tab_)
      if (!row.empty()) return false;
    return true;
  }

  // antisymmetry of the dense tensor; cheap insurance after any construction
  void validate() const {
    for (int i = 0; i < n_; ++i) {
      if (!table(i, i).empty()) throw algebra_error("nonzero square of a basis vector");
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (!f_.eq(c(i, j, k), f_.neg(c(j, i, k))))
            throw algebra_error("structure tensor is not antisymmetric");
    }
  }

  // annihilator of the whole algebra
  Subspace<F> center() const {
    Matrix<F> m(f_, n_ * n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i)
        for (const auto& [k, cc] : table(i, j)) m.at(j * n_ + k, i) = f_.add(m.at(j * n_ + k, i), cc);
    return Subspace<F>::kernel(f_, m);
  }

  // z with J(a, b, z) = 0 for all a, b; the defect of being Lie
  Subspace<F> lie_center() const {
    const int pairs = n_ * (n_ - 1) / 2;
    Matrix<F> m(f_, pairs * n_, n_);
    int row0 = 0;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        for (int i = 0; i < n_; ++i) {
          auto j = jacobiator(unit_vec(f_, n_, a), unit_vec(f_, n_, b), unit_vec(f_, n_, i));
          for (int k = 0; k < n_; ++k) m.at(row0 + k, i) = j[k];
        }
        row0 += n_;
      }
    return Subspace<F>::kernel(f_, m);
  }

  bool is_ideal(const Subspace<F>& s) const {
    for (int i = 0; i < n_; ++i)
      for (const auto& row : s.rows())
        if (!s.contains(f_, mul(unit_vec(f_, n_, i), row))) return false;
    return true;
  }

  // quotient by an ideal; coset representatives are the standard basis vectors
  // at the non-pivot coordinates of the ideal's echelon basis
  Algebra quotient(const Subspace<F>& ideal, std::string qname) const {
    if (!is_ideal(ideal)) throw algebra_error("quotient by a non-ideal");
    std::vector<bool> is_pivot(n_, false);
    for (int p : ideal.pivots()) is_pivot[p] = true;
    std::vector<int> coset;  // quotient coordinate -> ambient coordinate
    for (int i = 0; i < n_; ++i)
      if (!is_pivot[i]) coset.push_back(i);
    const int m = int(coset.size());
    Algebra q(f_, m, std::move(qname));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        auto prod = ideal.reduce(f_, mul(unit_vec(f_, n_, coset[a]), unit_vec(f_, n_, coset[b])));
        for (int t = 0; t < m; ++t)
          if (!f_.is_zero(prod[coset[t]])) q.add_product(a, b, t, prod[coset[t]]);
      }
    q.validate();
    return q;
  }

  static Algebra direct_sum(const Algebra& a, const Algebra& b, std::string name) {
    Algebra r(a.f_, a.n_ + b.n_, std::move(name));
    for (int i = 0; i < a.n_; ++i)
      for (int j = i + 1; j < a.n_; ++j)
        for (const auto& [k, cc] : a.table(i, j)) r.add_product(i, j, k, cc);
    for (int i = 0; i < b.n_; ++i)
      for (int j = i + 1; j < b.n_; ++j)
        for (const auto& [k, cc] : b.table(i, j)) r.add_product(a.n_ + i, a.n_ + j, a.n_ + k, cc);
    r.validate();
    return r;
  }

private:
  F f_;
  int n_;
  std::string name_;
  std::vector<Row> tab_;

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw algebra_error("basis index out of range");
  }

  void accum(int i, int j, int k, const Elem& c) {
    auto& row = tab_[size_t(i) * n_ + j];
    for (auto it = row.begin(); it != row.end(); ++it)
      if (it->first == k) {
        it->second = f_.add(it->second, c);
        if (f_.is_zero(it->second)) row.erase(it);
        return;
      }
    row.emplace_back(k, c);
  }
};

}  // namespace cdalg
