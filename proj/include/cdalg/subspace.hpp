// Subspaces of K^n held in reduced row echelon form. The RREF basis is a
// canonical representative, so equality of subspaces is equality of rows.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cdalg/linalg.hpp"

namespace cdalg {

template <class F>
class Subspace {
public:
  using Elem = typename F::Elem;

  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace span(const F& f, const std::vector<Vec<F>>& vectors, int ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    auto r = rref(f, Matrix<F>::from_rows(f, vectors, ambient));
    s.pivots_ = r.pivots;
    for (int i = 0; i < r.rank; ++i) s.rows_.push_back(r.mat.row(i));
    return s;
  }

  static Subspace full(const F& f, int ambient) {
    std::vector<Vec<F>> rows;
    for (int i = 0; i < ambient; ++i) rows.push_back(unit_vec(f, ambient, i));
    return span(f, rows, ambient);
  }

  static Subspace kernel(const F& f, const Matrix<F>& m) {
    return span(f, kernel_basis(f, m), m.cols());
  }

  int dim() const { return int(rows_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<Vec<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // residue of v after subtracting its projection onto the span
  Vec<F> reduce(const F& f, Vec<F> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const auto& c = v[pivots_[r]];
      if (f.is_zero(c)) continue;
      const auto coef = c;  // pivot entries are 1
      for (int j = 0; j < ambient_; ++j) v[j] = f.sub(v[j], f.mul(coef, rows_[r][j]));
    }
    return v;
  }

  bool contains(const F& f, const Vec<F>& v) const { return vec_is_zero(f, reduce(f, v)); }

  bool contains(const F& f, const Subspace& other) const {
    for (const auto& row : other.rows_)
      if (!contains(f, row)) return false;
    return true;
  }

  // coordinates of v in the canonical basis, if v lies in the span
  std::optional<Vec<F>> coordinates(const F& f, const Vec<F>& v) const {
    Vec<F> coords = zero_vec(f, dim());
    Vec<F> rest = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
      coords[r] = rest[pivots_[r]];
      if (f.is_zero(coords[r])) continue;
      for (int j = 0; j < ambient_; ++j) rest[j] = f.sub(rest[j], f.mul(coords[r], rows_[r][j]));
    }
    if (!vec_is_zero(f, rest)) return std::nullopt;
    return coords;
  }

  Subspace sum(const F& f, const Subspace& other) const {
    require_same_ambient(other);
    std::vector<Vec<F>> rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return span(f, rows, ambient_);
  }

  // Zassenhaus: rref of [U|U; W|0], rows with zero left half carry the intersection
  Subspace intersect(const F& f, const Subspace& other) const {
    require_same_ambient(other);
    const int n = ambient_;
    std::vector<Vec<F>> rows;
    for (const auto& u : rows_) {
      Vec<F> r = u;
      r.insert(r.end(), u.begin(), u.end());
      rows.push_back(std::move(r));
    }
    for (const auto& w : other.rows_) {
      Vec<F> r = w;
      r.resize(2 * n, f.zero());
      rows.push_back(std::move(r));
    }
    auto rr = rref(f, Matrix<F>::from_rows(f, rows, 2 * n));
    std::vector<Vec<F>> inter;
    for (int i = 0; i < rr.rank; ++i) {
      bool left_zero = true;
      for (int j = 0; j < n && left_zero; ++j) left_zero = f.is_zero(rr.mat.at(i, j));
      if (!left_zero) continue;
      Vec<F> right(n, f.zero());
      for (int j = 0; j < n; ++j) right[j] = rr.mat.at(i, n + j);
      inter.push_back(std::move(right));
    }
    return span(f, inter, n);
  }

  // dim(this / other); other must be contained in this
  int quotient_dim(const F& f, const Subspace& other) const {
    if (!contains(f, other)) throw std::domain_error("quotient_dim: not a subspace");
    return dim() - other.dim();
  }

  bool eq(const F& f, const Subspace& other) const {
    if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
    for (size_t r = 0; r < rows_.size(); ++r)
      if (!vec_eq(f, rows_[r], other.rows_[r])) return false;
    return true;
  }

private:
  int ambient_ = 0;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;

  void require_same_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::domain_error("ambient dimensions differ");
  }
};

// some vector of big not lying in small, if one exists (canonical: first suitable
// RREF basis row)
template <class F>
std::optional<Vec<F>> complement_vector(const F& f, const Subspace<F>& big, const Subspace<F>& small) {
  for (const auto& row : big.rows())
    if (!small.contains(f, row)) return row;
  return std::nullopt;
}

}  // namespace cdalg
