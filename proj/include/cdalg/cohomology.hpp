// Cohomology for anticommutative algebras whose multiplication operators
// bracket into derivations, plus the classical Chevalley-Eilenberg complex for
// comparison. Cochains are alternating with values in a module.
//
// Two different objects both deserve the name "differential" here and the
// distinction is load-bearing. The raw formulas below are skew in (x,y) and in
// the a-block separately but not under mixing the blocks; cocycle spaces are
// kernels of the RAW formulas over all tuples. differential() instead returns
// the full alternation of the raw value, which is what makes d after d vanish
// and is the right object to store on the wedge basis.
#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "cdalg/algebra.hpp"

namespace cdalg {

enum class CohomologyTheory { CD_even, CD_odd, ChevalleyEilenberg, AlmostLie };

inline const char* theory_name(CohomologyTheory t) {
  switch (t) {
    case CohomologyTheory::CD_even: return "cd";
    case CohomologyTheory::CD_odd: return "cd-odd";
    case CohomologyTheory::ChevalleyEilenberg: return "ce";
    case CohomologyTheory::AlmostLie: return "almost-lie";
  }
  return "?";
}

// left action of A on a vector space: act[i] is the matrix of e_i
template <class F>
struct CDModule {
  using Elem = typename F::Elem;

  int dim = 0;
  std::vector<Matrix<F>> act;

  Vec<F> apply(const F& f, int i, const Vec<F>& v) const { return act[i].apply(f, v); }

  Vec<F> apply(const F& f, const Vec<F>& a, const Vec<F>& v) const {
    Vec<F> r = zero_vec(f, dim);
    for (size_t i = 0; i < act.size(); ++i) {
      if (f.is_zero(a[i])) continue;
      vec_axpy(f, r, a[i], act[i].apply(f, v));
    }
    return r;
  }

  Matrix<F> act_of(const F& f, const Vec<F>& a) const {
    Matrix<F> r(f, dim, dim);
    for (size_t i = 0; i < act.size(); ++i)
      if (!f.is_zero(a[i])) r = mat_add(f, r, mat_scale(f, a[i], act[i]));
    return r;
  }
};

template <class F>
CDModule<F> trivial_module(const Algebra<F>& A, int m = 1) {
  CDModule<F> md;
  md.dim = m;
  md.act.assign(A.dim(), Matrix<F>(A.field(), m, m));
  return md;
}

// A acting on itself by left multiplication
template <class F>
CDModule<F> adjoint_module(const Algebra<F>& A) {
  const F& f = A.field();
  const int n = A.dim();
  CDModule<F> md;
  md.dim = n;
  md.act.assign(n, Matrix<F>(f, n, n));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c)
      for (const auto& [k, cc] : A.table(i, c)) md.act[i].at(k, c) = cc;
  return md;
}

// module axiom, as one matrix identity per basis triple; on the adjoint
// module it holds exactly when the 6-term identity of the algebra does
template <class F>
bool is_cd_module(const Algebra<F>& A, const CDModule<F>& M) {
  const F& f = A.field();
  const int n = A.dim();
  if (int(M.act.size()) != n) throw std::domain_error("module action does not match the algebra dimension");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto ij = A.mul_basis(i, j);
        auto t = M.act_of(f, A.mul(ij, unit_vec(f, n, k)));
        t = mat_add(f, t, mat_mul(f, M.act[k], M.act_of(f, ij)));
        t = mat_sub(f, t, mat_mul(f, M.act[i], M.act_of(f, A.mul_basis(j, k))));
        t = mat_add(f, t, mat_mul(f, M.act[j], M.act_of(f, A.mul_basis(i, k))));
        t = mat_sub(f, t, mat_mul(f, M.act[i], mat_mul(f, M.act[k], M.act[j])));
        t = mat_add(f, t, mat_mul(f, M.act[j], mat_mul(f, M.act[k], M.act[i])));
        if (!t.is_zero(f)) return false;
      }
  return true;
}

// m with (xy).m + y.(x.m) - x.(y.m) = 0 for all x, y in A; on the adjoint
// module this is the Lie center of the algebra
template <class F>
Subspace<F> lie_center_of_module(const Algebra<F>& A, const CDModule<F>& M) {
  const F& f = A.field();
  const int n = A.dim();
  const int pairs = n * (n - 1) / 2;
  Matrix<F> sys(f, pairs * M.dim, M.dim);
  int row0 = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      auto c = M.act_of(f, A.mul_basis(x, y));
      c = mat_add(f, c, mat_mul(f, M.act[y], M.act[x]));
      c = mat_sub(f, c, mat_mul(f, M.act[x], M.act[y]));
      for (int r = 0; r < M.dim; ++r)
        for (int s = 0; s < M.dim; ++s) sys.at(row0 + r, s) = c.at(r, s);
      row0 += M.dim;
    }
  return Subspace<F>::kernel(f, sys);
}

namespace detail {

struct WedgeIndex {
  int n = 0, k = 0;
  std::vector<std::vector<int>> tuples;        // strictly increasing, lexicographic
  std::map<std::vector<int>, int> rank;
};

inline std::shared_ptr<const WedgeIndex> wedge_index(int n, int k) {
  static std::map<std::pair<int, int>, std::shared_ptr<const WedgeIndex>> cache;
  auto key = std::make_pair(n, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto w = std::make_shared<WedgeIndex>();
  w->n = n;
  w->k = k;
  if (k == 0) {
    w->tuples.push_back({});
  } else if (k <= n) {
    std::vector<int> t(k);
    std::iota(t.begin(), t.end(), 0);
    while (true) {
      w->tuples.push_back(t);
      int pos = k - 1;
      while (pos >= 0 && t[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++t[pos];
      for (int q = pos + 1; q < k; ++q) t[q] = t[q - 1] + 1;
    }
  }
  for (size_t r = 0; r < w->tuples.size(); ++r) w->rank[w->tuples[r]] = int(r);
  cache[key] = w;
  return w;
}

}  // namespace detail

// alternating multilinear map A^deg -> M, stored on increasing index tuples
template <class F>
class Cochain {
public:
  using Elem = typename F::Elem;

  Cochain(const F& f, int n, int m, int deg)
      : n_(n), m_(m), deg_(deg), idx_(detail::wedge_index(n, deg)),
        vals_(idx_->tuples.size(), zero_vec(f, m)) {}

  int algebra_dim() const { return n_; }
  int module_dim() const { return m_; }
  int degree() const { return deg_; }
  int wedge_dim() const { return int(vals_.size()); }
  const std::vector<std::vector<int>>& tuples() const { return idx_->tuples; }

  Vec<F>& at(const std::vector<int>& t) {
    auto it = idx_->rank.find(t);
    if (it == idx_->rank.end()) throw std::domain_error("cochain storage index must be strictly increasing");
    return vals_[it->second];
  }
  const Vec<F>& at(const std::vector<int>& t) const {
    return const_cast<Cochain*>(this)->at(t);
  }

  // arbitrary index tuple; sorts with sign, repeats give zero
  Vec<F> eval(const F& f, std::vector<int> t) const {
    bool neg = false;
    for (size_t a = 0; a + 1 < t.size(); ++a)
      for (size_t b = 0; b + 1 < t.size() - a; ++b)
        if (t[b] > t[b + 1]) {
          std::swap(t[b], t[b + 1]);
          neg = !neg;
        }
    for (size_t a = 0; a + 1 < t.size(); ++a)
      if (t[a] == t[a + 1]) return zero_vec(f, m_);
    auto it = idx_->rank.find(t);
    if (it == idx_->rank.end()) return zero_vec(f, m_);  // deg > n only
    return neg ? vec_neg(f, vals_[it->second]) : vals_[it->second];
  }

  // first argument a general vector, remaining arguments basis indices
  Vec<F> eval_lin(const F& f, const Vec<F>& first, const std::vector<int>& rest) const {
    Vec<F> acc = zero_vec(f, m_);
    std::vector<int> t(deg_);
    for (size_t q = 0; q < rest.size(); ++q) t[q + 1] = rest[q];
    for (int i = 0; i < n_; ++i) {
      if (f.is_zero(first[i])) continue;
      t[0] = i;
      auto v = eval(f, t);
      vec_axpy(f, acc, first[i], v);
    }
    return acc;
  }

  Vec<F> flatten(const F& f) const {
    Vec<F> out = zero_vec(f, wedge_dim() * m_);
    for (int r = 0; r < wedge_dim(); ++r)
      for (int s = 0; s < m_; ++s) out[size_t(r) * m_ + s] = vals_[r][s];
    return out;
  }

  static Cochain from_flat(const F& f, int n, int m, int deg, const Vec<F>& coords) {
    Cochain c(f, n, m, deg);
    for (int r = 0; r < c.wedge_dim(); ++r)
      for (int s = 0; s < m; ++s) c.vals_[r][s] = coords[size_t(r) * m + s];
    return c;
  }

private:
  int n_ = 0, m_ = 0, deg_ = 0;
  std::shared_ptr<const detail::WedgeIndex> idx_;
  std::vector<Vec<F>> vals_;
};

// degree-0 data for the even chain: an element of LZ(M) plus a tensor in
// A (x) M with entry (i,s) the coefficient of e_i (x) e_s
template <class F>
struct CochainZero {
  Vec<F> lz;
  Matrix<F> tensor;
};

// d of the classical complex: sum over i<j of (-1)^{i+j+1} phi((x_i x_j), rest)
// plus sum over i of (-1)^i x_i.phi(rest), indices 1-based
template <class F>
Vec<F> ce_differential_raw(const Algebra<F>& A, const CDModule<F>& M, const Cochain<F>& phi,
                           const std::vector<int>& t) {
  const F& f = A.field();
  const int k = int(t.size());
  Vec<F> acc = zero_vec(f, M.dim);
  auto add = [&](const Vec<F>& v, bool plus) {
    vec_axpy(f, acc, plus ? f.one() : f.neg(f.one()), v);
  };
  for (int i = 0; i < k; ++i) {
    std::vector<int> rest;
    for (int r = 0; r < k; ++r)
      if (r != i) rest.push_back(t[r]);
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> rest2;
      for (int r = 0; r < k; ++r)
        if (r != i && r != j) rest2.push_back(t[r]);
      add(phi.eval_lin(f, A.mul_basis(t[i], t[j]), rest2), (i + j) % 2 == 1);
    }
    add(M.apply(f, t[i], phi.eval(f, rest)), i % 2 == 1);
  }
  return acc;
}

// d of degree-raising-by-two type on the tuple (x, y, a_1..a_n); the value is
// skew in (x,y) and under permuting the a-block, but not across the blocks
template <class F>
Vec<F> cd_differential_raw(const Algebra<F>& A, const CDModule<F>& M, const Cochain<F>& phi,
                           const std::vector<int>& t) {
  const F& f = A.field();
  const int n = A.dim();
  const int nb = phi.degree();  // a-block length
  const int x = t[0], y = t[1];
  Vec<F> acc = zero_vec(f, M.dim);
  auto add = [&](const Vec<F>& v, bool plus) {
    vec_axpy(f, acc, plus ? f.one() : f.neg(f.one()), v);
  };
  auto xy = A.mul_basis(x, y);
  for (int i = 1; i <= nb; ++i) {
    const int ai = t[1 + i];
    std::vector<int> rest;
    for (int r = 1; r <= nb; ++r)
      if (r != i) rest.push_back(t[1 + r]);
    const bool pos = (i % 2 == 1);
    add(phi.eval_lin(f, A.mul(xy, unit_vec(f, n, ai)), rest), pos);
    add(M.apply(f, ai, phi.eval_lin(f, xy, rest)), pos);
    add(M.apply(f, x, phi.eval_lin(f, A.mul_basis(y, ai), rest)), !pos);
    add(M.apply(f, y, phi.eval_lin(f, A.mul_basis(x, ai), rest)), pos);
    std::vector<int> ty{y};
    ty.insert(ty.end(), rest.begin(), rest.end());
    add(M.apply(f, x, M.apply(f, ai, phi.eval(f, ty))), !pos);
    std::vector<int> tx{x};
    tx.insert(tx.end(), rest.begin(), rest.end());
    add(M.apply(f, y, M.apply(f, ai, phi.eval(f, tx))), pos);
  }
  for (int i = 1; i <= nb; ++i)
    for (int j = i + 1; j <= nb; ++j) {
      const int ai = t[1 + i], aj = t[1 + j];
      std::vector<int> rest;
      for (int r = 1; r <= nb; ++r)
        if (r != i && r != j) rest.push_back(t[1 + r]);
      const bool pos = ((i + j + nb) % 2 == 0);
      std::vector<int> ry{y};
      ry.insert(ry.end(), rest.begin(), rest.end());
      std::vector<int> rx{x};
      rx.insert(rx.end(), rest.begin(), rest.end());
      add(phi.eval_lin(f, A.mul(A.mul_basis(x, ai), unit_vec(f, n, aj)), ry), pos);
      add(phi.eval_lin(f, A.mul(A.mul_basis(x, aj), unit_vec(f, n, ai)), ry), !pos);
      add(phi.eval_lin(f, A.mul(A.mul_basis(y, ai), unit_vec(f, n, aj)), rx), !pos);
      add(phi.eval_lin(f, A.mul(A.mul_basis(y, aj), unit_vec(f, n, ai)), rx), pos);
      std::vector<int> rxy{x, y};
      rxy.insert(rxy.end(), rest.begin(), rest.end());
      auto base = phi.eval(f, rxy);
      add(M.apply(f, ai, M.apply(f, aj, base)), pos);
      add(M.apply(f, aj, M.apply(f, ai, base)), !pos);
    }
  return acc;
}

namespace detail {

inline bool uses_classical_form(CohomologyTheory th, int source_degree) {
  switch (th) {
    case CohomologyTheory::ChevalleyEilenberg: return true;
    case CohomologyTheory::AlmostLie:
    case CohomologyTheory::CD_even: return source_degree == 1;
    case CohomologyTheory::CD_odd: return false;
  }
  return false;
}

inline int target_degree(CohomologyTheory th, int source_degree) {
  return uses_classical_form(th, source_degree) ? source_degree + 1 : source_degree + 2;
}

template <class F>
typename F::Elem factorial_elem(const F& f, int k) {
  auto r = f.one();
  for (int i = 2; i <= k; ++i) r = f.mul(r, f.from_int(i));
  if (f.is_zero(r)) throw std::domain_error("characteristic too small to alternate in this degree");
  return r;
}

}  // namespace detail

// into the chain; the full alternation of the raw value, stored on the wedge
template <class F>
Cochain<F> differential(const Algebra<F>& A, const CDModule<F>& M, CohomologyTheory th,
                        const Cochain<F>& phi) {
  const F& f = A.field();
  const int n = A.dim();
  if (th == CohomologyTheory::AlmostLie && phi.degree() != 1)
    throw std::domain_error("the almost-lie chain carries no differential in this degree");
  const bool classical = detail::uses_classical_form(th, phi.degree());
  const int deg = detail::target_degree(th, phi.degree());
  Cochain<F> out(f, n, M.dim, deg);
  if (out.wedge_dim() == 0) return out;
  const auto kfac = detail::factorial_elem(f, deg);
  for (const auto& base : out.tuples()) {
    Vec<F> sum = zero_vec(f, M.dim);
    std::vector<int> perm(deg);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (int a = 0; a < deg; ++a)
        for (int b = a + 1; b < deg; ++b)
          if (perm[a] > perm[b]) ++inv;
      std::vector<int> t(deg);
      for (int a = 0; a < deg; ++a) t[a] = base[perm[a]];
      auto v = classical ? ce_differential_raw(A, M, phi, t) : cd_differential_raw(A, M, phi, t);
      vec_axpy(f, sum, inv % 2 == 0 ? f.one() : f.neg(f.one()), v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.at(base) = vec_scale(f, f.inv(kfac), sum);
  }
  return out;
}

// bottom of the even chain: d(z, T)(b) = b.z + sum T(i,s) [(b e_i).e_s + e_i.(b.e_s)];
// the z part must lie in LZ(M)
template <class F>
Cochain<F> differential0_even(const Algebra<F>& A, const CDModule<F>& M, const CochainZero<F>& c0) {
  const F& f = A.field();
  const int n = A.dim();
  if (!lie_center_of_module(A, M).contains(f, c0.lz))
    throw std::domain_error("degree-0 module part must lie in the Lie center of the module");
  Cochain<F> out(f, n, M.dim, 1);
  for (int b = 0; b < n; ++b) {
    Vec<F> v = M.apply(f, b, c0.lz);
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < M.dim; ++s) {
        const auto& c = c0.tensor.at(i, s);
        if (f.is_zero(c)) continue;
        auto es = unit_vec(f, M.dim, s);
        vec_axpy(f, v, c, M.apply(f, A.mul_basis(b, i), es));
        vec_axpy(f, v, c, M.apply(f, i, M.apply(f, b, es)));
      }
    out.at({b}) = v;
  }
  return out;
}

// bottom of the odd chain (and of the classical one): d(m)(x) = x.m
template <class F>
Cochain<F> differential0_odd(const Algebra<F>& A, const CDModule<F>& M, const Vec<F>& m) {
  const F& f = A.field();
  Cochain<F> out(f, A.dim(), M.dim, 1);
  for (int x = 0; x < A.dim(); ++x) out.at({x}) = M.apply(f, x, m);
  return out;
}

// kernel of the raw differential over all argument tuples, as coordinates on
// the wedge basis of C^degree; NOT the kernel of the alternated differential,
// which is strictly larger in general
template <class F>
Subspace<F> cocycle_space(const Algebra<F>& A, const CDModule<F>& M, CohomologyTheory th,
                          int degree) {
  const F& f = A.field();
  const int n = A.dim(), m = M.dim;
  if (degree < 1) throw std::domain_error("cocycles start at degree 1");
  auto idx = detail::wedge_index(n, degree);
  const int wedge = int(idx->tuples.size());
  const int cols = wedge * m;
  if (th == CohomologyTheory::AlmostLie) {
    if (degree != 2) throw std::domain_error("the almost-lie theory is a degree-2 theory");
    return Subspace<F>::full(f, cols);
  }
  const bool classical = detail::uses_classical_form(th, degree);
  // by the block skew-symmetries of the raw value these tuples already
  // enforce the all-tuples kernel
  std::vector<std::vector<int>> ctuples;
  if (classical) {
    ctuples = detail::wedge_index(n, degree + 1)->tuples;
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (const auto& ablock : detail::wedge_index(n, degree)->tuples) {
          std::vector<int> t{x, y};
          t.insert(t.end(), ablock.begin(), ablock.end());
          ctuples.push_back(std::move(t));
        }
  }
  Matrix<F> sys(f, int(ctuples.size()) * m, cols);
  for (int r = 0; r < wedge; ++r)
    for (int s = 0; s < m; ++s) {
      Cochain<F> basis(f, n, m, degree);
      basis.at(idx->tuples[r])[s] = f.one();
      const int col = r * m + s;
      for (size_t ct = 0; ct < ctuples.size(); ++ct) {
        auto v = classical ? ce_differential_raw(A, M, basis, ctuples[ct])
                           : cd_differential_raw(A, M, basis, ctuples[ct]);
        for (int q = 0; q < m; ++q) sys.at(int(ct) * m + q, col) = v[q];
      }
    }
  return Subspace<F>::kernel(f, sys);
}

// image of the differential landing in C^degree
template <class F>
Subspace<F> coboundary_space(const Algebra<F>& A, const CDModule<F>& M, CohomologyTheory th,
                             int degree) {
  const F& f = A.field();
  const int n = A.dim(), m = M.dim;
  const int cols = int(detail::wedge_index(n, degree)->tuples.size()) * m;
  std::vector<Vec<F>> rows;
  if (degree == 1) {
    if (th == CohomologyTheory::AlmostLie)
      throw std::domain_error("the almost-lie theory is a degree-2 theory");
    if (th == CohomologyTheory::CD_even) {
      auto lzm = lie_center_of_module(A, M);
      Matrix<F> zero_tensor(f, n, m);
      for (const auto& z : lzm.rows())
        rows.push_back(differential0_even(A, M, CochainZero<F>{z, zero_tensor}).flatten(f));
      for (int i = 0; i < n; ++i)
        for (int s = 0; s < m; ++s) {
          CochainZero<F> c0{zero_vec(f, m), Matrix<F>(f, n, m)};
          c0.tensor.at(i, s) = f.one();
          rows.push_back(differential0_even(A, M, c0).flatten(f));
        }
    } else {
      for (int s = 0; s < m; ++s)
        rows.push_back(differential0_odd(A, M, unit_vec(f, m, s)).flatten(f));
    }
    return Subspace<F>::span(f, rows, cols);
  }
  int source = 0;
  switch (th) {
    case CohomologyTheory::ChevalleyEilenberg: source = degree - 1; break;
    case CohomologyTheory::AlmostLie:
      if (degree != 2) throw std::domain_error("the almost-lie theory is a degree-2 theory");
      source = 1;
      break;
    case CohomologyTheory::CD_even: source = degree == 2 ? 1 : degree - 2; break;
    case CohomologyTheory::CD_odd: source = degree - 2; break;
  }
  if (source < 1 || detail::target_degree(th, source) != degree)
    throw std::domain_error("no differential lands in this degree for this theory");
  auto sidx = detail::wedge_index(n, source);
  for (size_t r = 0; r < sidx->tuples.size(); ++r)
    for (int s = 0; s < m; ++s) {
      Cochain<F> basis(f, n, m, source);
      basis.at(sidx->tuples[r])[s] = f.one();
      rows.push_back(differential(A, M, th, basis).flatten(f));
    }
  return Subspace<F>::span(f, rows, cols);
}

template <class F>
int cohomology_dim(const Algebra<F>& A, const CDModule<F>& M, CohomologyTheory th, int degree) {
  auto z = cocycle_space(A, M, th, degree);
  auto b = coboundary_space(A, M, th, degree);
  return z.quotient_dim(A.field(), b);
}

template <class F>
struct CentralExtension {
  Algebra<F> algebra;
  int base_dim = 0;
  int fiber_dim = 0;
};

// A + K^m with product (x,y) -> xy + phi(x,y), the new coordinates central;
// the variety of the result reads off where phi sits: for Lie A it is always
// almost-Lie, it is CD exactly for raw 2-cocycles, Lie exactly for classical
// 2-cocycles
template <class F>
CentralExtension<F> central_extension(const Algebra<F>& A, const Cochain<F>& phi,
                                      std::string name = "") {
  const F& f = A.field();
  const int n = A.dim(), m = phi.module_dim();
  if (phi.degree() != 2) throw std::domain_error("central extensions are built from 2-cochains");
  if (phi.algebra_dim() != n) throw std::domain_error("cochain does not match the algebra dimension");
  if (name.empty()) name = A.name() + " ext";
  Algebra<F> e(f, n + m, std::move(name));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (const auto& [k, cc] : A.table(i, j)) e.add_product(i, j, k, cc);
      const auto& v = phi.at({i, j});
      for (int s = 0; s < m; ++s) e.add_product(i, j, n + s, v[s]);
    }
  e.validate();
  return {std::move(e), n, m};
}

}  // namespace cdalg
