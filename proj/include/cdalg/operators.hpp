// Multiplication operators, derivations, and the Lie structures they span
// inside gl(A). Operators act on column vectors; [F,G] = FG - GF, the reading
// under which [D, R_a] = R_{D(a)} for every derivation D.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cdalg/algebra.hpp"

namespace cdalg {

// R_a: x -> x a, column i holds e_i a
template <class F>
Matrix<F> right_mult(const Algebra<F>& A, const Vec<F>& a) {
  const F& f = A.field();
  const int n = A.dim();
  Matrix<F> m(f, n, n);
  for (int i = 0; i < n; ++i) {
    auto col = A.mul(unit_vec(f, n, i), a);
    for (int k = 0; k < n; ++k) m.at(k, i) = col[k];
  }
  return m;
}

template <class F>
Matrix<F> right_mult_basis(const Algebra<F>& A, int i) {
  const F& f = A.field();
  const int n = A.dim();
  Matrix<F> m(f, n, n);
  for (int j = 0; j < n; ++j)
    for (const auto& [k, cc] : A.table(j, i)) m.at(k, j) = cc;
  return m;
}

template <class F>
Matrix<F> commutator(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  return mat_sub(f, mat_mul(f, a, b), mat_mul(f, b, a));
}

template <class F>
Matrix<F> unflatten(const F& f, const Vec<F>& v, int n) {
  Matrix<F> m(f, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = v[size_t(r) * n + c];
  return m;
}

// span of all R_a inside gl(A), as row-major flattened vectors;
// dim equals dim A - dim Z(A)
template <class F>
Subspace<F> right_mult_space(const Algebra<F>& A) {
  const int n = A.dim();
  std::vector<Vec<F>> rows;
  for (int i = 0; i < n; ++i) rows.push_back(right_mult_basis(A, i).flatten());
  return Subspace<F>::span(A.field(), rows, n * n);
}

// all D with D(xy) = D(x)y + x D(y); kernel of the linear system over basis
// pairs i < j (the diagonal is automatic by anticommutativity)
template <class F>
Subspace<F> derivation_algebra(const Algebra<F>& A) {
  const F& f = A.field();
  const int n = A.dim();
  const int pairs = n * (n - 1) / 2;
  Matrix<F> m(f, pairs * n, n * n);  // unknown D_{r,c} at column r*n + c
  int row0 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (const auto& [mm, cc] : A.table(i, j))
        for (int k = 0; k < n; ++k) {
          auto& e = m.at(row0 + k, k * n + mm);
          e = f.add(e, cc);
        }
      for (int r = 0; r < n; ++r) {
        for (const auto& [k, cc] : A.table(r, j)) {
          auto& e = m.at(row0 + k, r * n + i);
          e = f.sub(e, cc);
        }
        for (const auto& [k, cc] : A.table(i, r)) {
          auto& e = m.at(row0 + k, r * n + j);
          e = f.sub(e, cc);
        }
      }
      row0 += n;
    }
  return Subspace<F>::kernel(f, m);
}

// all D with D((xy)a) = D(xy)a + D(xa)y - D(ya)x - (D(x)a)y + (D(y)a)x;
// in a CD algebra this space contains every R_a
template <class F>
Subspace<F> cd_derivations(const Algebra<F>& A) {
  const F& f = A.field();
  const int n = A.dim();
  const int pairs = n * (n - 1) / 2;
  Matrix<F> m(f, pairs * n * n, n * n);
  // column r*n + c is the value of the defect on the matrix unit E_{rc},
  // assembled triple by triple (defect is antisymmetric in x, y)
  for (int r = 0; r < n; ++r) {
    auto er = unit_vec(f, n, r);
    for (int c = 0; c < n; ++c) {
      const int col = r * n + c;
      int row0 = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto xy = A.mul_basis(i, j);
          for (int a = 0; a < n; ++a) {
            auto w1 = A.mul(xy, unit_vec(f, n, a));  // (xy)a
            Vec<F> val = zero_vec(f, n);
            // D(w1), D = E_{rc}, picks coordinate c
            if (!f.is_zero(w1[c])) val[r] = w1[c];
            // - D(xy) a
            vec_axpy(f, val, f.neg(xy[c]), A.mul(er, unit_vec(f, n, a)));
            // - D(xa) j
            auto xa = A.mul_basis(i, a);
            vec_axpy(f, val, f.neg(xa[c]), A.mul(er, unit_vec(f, n, j)));
            // + D(ya) i
            auto ya = A.mul_basis(j, a);
            vec_axpy(f, val, ya[c], A.mul(er, unit_vec(f, n, i)));
            // + (D(x) a) y
            if (c == i) val = vec_add(f, val, A.mul(A.mul(er, unit_vec(f, n, a)), unit_vec(f, n, j)));
            // - (D(y) a) x
            if (c == j) val = vec_sub(f, val, A.mul(A.mul(er, unit_vec(f, n, a)), unit_vec(f, n, i)));
            for (int k = 0; k < n; ++k) m.at(row0 + k, col) = val[k];
            row0 += n;
          }
        }
    }
  }
  return Subspace<F>::kernel(f, m);
}

// smallest Lie subalgebra of gl(A) containing all R_a: closure of R(A) under
// bracketing with the generators (left-normed brackets span the closure)
template <class F>
Subspace<F> lie_multiplication_algebra(const Algebra<F>& A) {
  const F& f = A.field();
  const int n = A.dim();
  std::vector<Matrix<F>> gens;
  std::vector<Vec<F>> rows;
  for (int i = 0; i < n; ++i) {
    gens.push_back(right_mult_basis(A, i));
    rows.push_back(gens.back().flatten());
  }
  auto space = Subspace<F>::span(f, rows, n * n);
  for (int step = 0; step < n * n; ++step) {
    std::vector<Vec<F>> next = space.rows();
    bool grew = false;
    for (const auto& row : space.rows()) {
      auto b = unflatten(f, row, n);
      for (const auto& g : gens) {
        auto v = commutator(f, b, g).flatten();
        if (!space.contains(f, v)) {
          next.push_back(std::move(v));
          grew = true;
        }
      }
    }
    if (!grew) break;
    space = Subspace<F>::span(f, next, n * n);
  }
  return space;
}

// span of R_z for z in the Lie center together with all [R_i, R_j]
template <class F>
Subspace<F> inner_derivations(const Algebra<F>& A) {
  const F& f = A.field();
  const int n = A.dim();
  std::vector<Vec<F>> rows;
  const auto lz = A.lie_center();
  for (const auto& z : lz.rows()) rows.push_back(right_mult(A, z).flatten());
  std::vector<Matrix<F>> rm;
  for (int i = 0; i < n; ++i) rm.push_back(right_mult_basis(A, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rows.push_back(commutator(f, rm[i], rm[j]).flatten());
  return Subspace<F>::span(f, rows, n * n);
}

struct CdOperatorResult {
  bool is_cd = true;
  std::optional<std::pair<int, int>> failing_pair;  // first i < j with [R_i,R_j] not a derivation
};

template <class F>
CdOperatorResult is_cd_operator_test(const Algebra<F>& A) {
  const F& f = A.field();
  const int n = A.dim();
  auto der = derivation_algebra(A);
  std::vector<Matrix<F>> rm;
  for (int i = 0; i < n; ++i) rm.push_back(right_mult_basis(A, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!der.contains(f, commutator(f, rm[i], rm[j]).flatten()))
        return {false, std::make_pair(i, j)};
  return {true, std::nullopt};
}

// Lie algebra on the formal direct sum R(A) + Der(A): brackets of two
// multiplications land in the Der summand, mixed brackets in the R summand.
// Basis: echelon basis of R(A) followed by echelon basis of Der(A);
// overlap in gl(A) is deliberately not identified.
template <class F>
Algebra<F> semidirect_r_der(const Algebra<F>& A, std::string name = "") {
  const F& f = A.field();
  const int n = A.dim();
  auto rsp = right_mult_space(A);
  auto dsp = derivation_algebra(A);
  const int p = rsp.dim(), q = dsp.dim();
  std::vector<Matrix<F>> basis;
  for (const auto& row : rsp.rows()) basis.push_back(unflatten(f, row, n));
  for (const auto& row : dsp.rows()) basis.push_back(unflatten(f, row, n));
  if (name.empty()) name = A.name() + " mult+der";
  Algebra<F> s(f, p + q, std::move(name));
  for (int i = 0; i < p + q; ++i)
    for (int j = i + 1; j < p + q; ++j) {
      auto br = commutator(f, basis[i], basis[j]).flatten();
      if (j < p) {
        auto coords = dsp.coordinates(f, br);
        if (!coords) throw algebra_error("bracket of multiplication operators is not a derivation");
        for (int t = 0; t < q; ++t) s.add_product(i, j, p + t, (*coords)[t]);
      } else if (i < p) {
        auto coords = rsp.coordinates(f, br);
        if (!coords)
          throw algebra_error("derivation does not normalize the multiplication operators");
        for (int t = 0; t < p; ++t) s.add_product(i, j, t, (*coords)[t]);
      } else {
        auto coords = dsp.coordinates(f, br);
        if (!coords) throw algebra_error("derivations failed to close under bracket");
        for (int t = 0; t < q; ++t) s.add_product(i, j, p + t, (*coords)[t]);
      }
    }
  s.validate();
  return s;
}

struct CenterOperatorReport {
  int lz_mod_z;   // dim of Lie center modulo annihilator
  int r_cap_der;  // dim of R(A) meet Der(A) inside gl(A); the two agree
};

template <class F>
CenterOperatorReport lie_center_operator_check(const Algebra<F>& A) {
  const F& f = A.field();
  auto lz = A.lie_center();
  auto z = A.center();
  auto r = right_mult_space(A);
  auto d = derivation_algebra(A);
  return {lz.quotient_dim(f, z), r.intersect(f, d).dim()};
}

}  // namespace cdalg
