// Dense exact matrices and Gauss-Jordan elimination. No pivoting heuristics:
// over an exact field the first nonzero entry is as good as any.
#pragma once

#include <utility>
#include <vector>

#include "cdalg/fields.hpp"

namespace cdalg {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
Vec<F> zero_vec(const F& f, int n) {
  return Vec<F>(n, f.zero());
}

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
bool vec_eq(const F& f, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

// a += c*b
template <class F>
void vec_axpy(const F& f, Vec<F>& a, const typename F::Elem& c, const Vec<F>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(c, b[i]));
}

template <class F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = f.add(r[i], b[i]);
  return r;
}

template <class F>
Vec<F> vec_sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = f.sub(r[i], b[i]);
  return r;
}

template <class F>
Vec<F> vec_scale(const F& f, const typename F::Elem& c, const Vec<F>& a) {
  Vec<F> r = a;
  for (auto& x : r) x = f.mul(c, x);
  return r;
}

template <class F>
Vec<F> vec_neg(const F& f, const Vec<F>& a) {
  Vec<F> r = a;
  for (auto& x : r) x = f.neg(x);
  return r;
}

template <class F>
Vec<F> unit_vec(const F& f, int n, int i) {
  Vec<F> r = zero_vec(f, n);
  r[i] = f.one();
  return r;
}

template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(const F& f, int rows, int cols)
      : rows_(rows), cols_(cols), a_(size_t(rows) * cols, f.zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Elem& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Vec<F> row(int r) const {
    return Vec<F>(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
  }
  void set_row(int r, const Vec<F>& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  static Matrix identity(const F& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const F& f, const std::vector<Vec<F>>& rows, int cols) {
    Matrix m(f, int(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(int(r), rows[r]);
    return m;
  }

  // column vector action
  Vec<F> apply(const F& f, const Vec<F>& v) const {
    Vec<F> r = zero_vec(f, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!f.is_zero(at(i, j)) && !f.is_zero(v[j]))
          r[i] = f.add(r[i], f.mul(at(i, j), v[j]));
    return r;
  }

  bool is_zero(const F& f) const {
    for (const auto& x : a_)
      if (!f.is_zero(x)) return false;
    return true;
  }

  bool eq(const F& f, const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!f.eq(a_[i], o.a_[i])) return false;
    return true;
  }

  // row-major flattening, used to treat operators as vectors
  Vec<F> flatten() const { return a_; }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

template <class F>
Matrix<F> mat_add(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(f, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  return r;
}

template <class F>
Matrix<F> mat_sub(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(f, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
  return r;
}

template <class F>
Matrix<F> mat_scale(const F& f, const typename F::Elem& c, const Matrix<F>& a) {
  Matrix<F> r(f, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f.mul(c, a.at(i, j));
  return r;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b.at(k, j))) r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return r;
}

template <class F>
struct RrefResult {
  Matrix<F> mat;            // fully reduced, pivots 1, zero rows sink to the bottom
  int rank = 0;
  std::vector<int> pivots;  // pivot column of row r, r < rank
};

template <class F>
RrefResult<F> rref(const F& f, Matrix<F> m) {
  RrefResult<F> res;
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(rank, c));
    const auto scale = f.inv(m.at(rank, col));
    for (int c = col; c < m.cols(); ++c) m.at(rank, c) = f.mul(scale, m.at(rank, c));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || f.is_zero(m.at(r, col))) continue;
      const auto factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
    }
    res.pivots.push_back(col);
    ++rank;
  }
  res.mat = std::move(m);
  res.rank = rank;
  return res;
}

// basis of { x : m x = 0 }, one row per free column
template <class F>
std::vector<Vec<F>> kernel_basis(const F& f, const Matrix<F>& m) {
  auto r = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v = zero_vec(f, m.cols());
    v[c] = f.one();
    for (int row = 0; row < r.rank; ++row) v[r.pivots[row]] = f.neg(r.mat.at(row, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cdalg
