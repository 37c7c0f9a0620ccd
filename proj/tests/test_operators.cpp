#include <catch2/catch_amalgamated.hpp>

#include "cdalg/catalog.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/varieties.hpp"

using namespace cdalg;

namespace {

const FieldQ Q;

std::vector<Algebra<FieldQ>> full_catalog() {
  return {make_abelian(Q, 3),   make_r2(Q),
          make_r2_plus_line(Q), make_heisenberg3(Q),
          make_sl2(Q),          make_b61(Q, Q.one()),
          make_b61(Q, Q.zero()), make_b61(Q, Q.from_int(-1)),
          make_malcev7(Q),      make_free_anticommutative(Q, 3, 2)};
}

std::vector<Algebra<FieldQ>> cd_catalog() {
  std::vector<Algebra<FieldQ>> out;
  for (auto& a : full_catalog())
    if (satisfies(a, Variety::CD).holds) out.push_back(std::move(a));
  return out;
}

// negate every product; operator subspaces must not move
Algebra<FieldQ> flipped(const Algebra<FieldQ>& a) {
  Algebra<FieldQ> r(Q, a.dim(), a.name() + " flipped");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      for (const auto& [k, c] : a.table(i, j)) r.add_product(i, j, k, Q.neg(c));
  r.validate();
  return r;
}

}  // namespace

TEST_CASE("derivations commute into right multiplications") {
  // defining property, checked entry-wise: [D, R_a] = R_{D(a)} for every
  // derivation-basis element D and every basis vector a
  for (const auto& a : full_catalog()) {
    CAPTURE(a.name());
    const int n = a.dim();
    auto der = derivation_algebra(a);
    for (const auto& row : der.rows()) {
      auto d = unflatten(Q, row, n);
      for (int i = 0; i < n; ++i) {
        auto ra = right_mult_basis(a, i);
        auto lhs = commutator(Q, d, ra);
        auto rhs = right_mult(a, d.apply(Q, unit_vec(Q, n, i)));
        REQUIRE(lhs.eq(Q, rhs));
        // the reversed bracket convention lands on the negation instead
        REQUIRE(commutator(Q, ra, d).eq(Q, mat_scale(Q, Q.from_int(-1), rhs)));
      }
    }
  }
}

TEST_CASE("operator subspaces ignore a global sign flip of the product") {
  for (const auto& a : {make_b61(Q, Q.one()), make_sl2(Q), make_malcev7(Q)}) {
    auto b = flipped(a);
    REQUIRE(derivation_algebra(a).eq(Q, derivation_algebra(b)));
    REQUIRE(right_mult_space(a).eq(Q, right_mult_space(b)));
    REQUIRE(lie_multiplication_algebra(a).eq(Q, lie_multiplication_algebra(b)));
    REQUIRE(inner_derivations(a).eq(Q, inner_derivations(b)));
    REQUIRE(cd_derivations(a).eq(Q, cd_derivations(b)));
  }
}

TEST_CASE("multiplication operators") {
  for (const auto& a : full_catalog()) {
    CAPTURE(a.name());
    const int n = a.dim();
    // R_a kills exactly the annihilator, which is the center here
    REQUIRE(right_mult_space(a).dim() == n - a.center().dim());
    // R(A) generates M(A), and M(A) is bracket-closed
    auto r = right_mult_space(a);
    auto m = lie_multiplication_algebra(a);
    REQUIRE(m.contains(Q, r));
    for (const auto& x : m.rows())
      for (const auto& y : m.rows()) {
        auto br = commutator(Q, unflatten(Q, x, n), unflatten(Q, y, n));
        REQUIRE(m.contains(Q, br.flatten()));
      }
  }
}

TEST_CASE("operator and identity views of the commutator condition agree") {
  for (const auto& a : full_catalog()) {
    CAPTURE(a.name());
    auto op = is_cd_operator_test(a);
    REQUIRE(op.is_cd == satisfies(a, Variety::CD).holds);
    if (op.is_cd) {
      REQUIRE(!op.failing_pair.has_value());
    } else {
      auto [i, j] = *op.failing_pair;
      // the reported bracket really fails the derivation property
      auto br = commutator(Q, right_mult_basis(a, i), right_mult_basis(a, j));
      REQUIRE(!derivation_algebra(a).contains(Q, br.flatten()));
    }
  }
  auto m7 = is_cd_operator_test(make_malcev7(Q));
  REQUIRE(m7.failing_pair == std::make_pair(0, 1));
}

TEST_CASE("right multiplications are cd-derivations on commutator-stable algebras") {
  for (const auto& a : cd_catalog()) {
    CAPTURE(a.name());
    auto cdd = cd_derivations(a);
    for (int i = 0; i < a.dim(); ++i)
      REQUIRE(cdd.contains(Q, right_mult_basis(a, i).flatten()));
    // brackets of right multiplications are honest derivations here
    REQUIRE(derivation_algebra(a).contains(Q, inner_derivations(a)));
  }
  // with zero products every linear map passes the defect test
  REQUIRE(cd_derivations(make_abelian(Q, 3)).dim() == 9);
}

TEST_CASE("cd-derivation defect vanishes entry-wise on the computed basis") {
  // independent re-check of the kernel computation: expand the defect
  //   D((xy)a) - D(xy)a - D(xa)y + D(ya)x + (D(x)a)y - (D(y)a)x
  // on basis triples for every basis element of the space
  for (const auto& a : {make_sl2(Q), make_b61(Q, Q.one()), make_malcev7(Q)}) {
    CAPTURE(a.name());
    const int n = a.dim();
    auto cdd = cd_derivations(a);
    for (const auto& row : cdd.rows()) {
      auto dm = unflatten(Q, row, n);
      auto d = [&](const Vec<FieldQ>& v) { return dm.apply(Q, v); };
      auto e = [&](int i) { return unit_vec(Q, n, i); };
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          for (int t = 0; t < n; ++t) {
            auto xy = a.mul(e(x), e(y));
            auto xa = a.mul(e(x), e(t));
            auto ya = a.mul(e(y), e(t));
            auto defect = d(a.mul(xy, e(t)));
            defect = vec_sub(Q, defect, a.mul(d(xy), e(t)));
            defect = vec_sub(Q, defect, a.mul(d(xa), e(y)));
            defect = vec_add(Q, defect, a.mul(d(ya), e(x)));
            defect = vec_add(Q, defect, a.mul(a.mul(d(e(x)), e(t)), e(y)));
            defect = vec_sub(Q, defect, a.mul(a.mul(d(e(y)), e(t)), e(x)));
            REQUIRE(vec_is_zero(Q, defect));
          }
    }
  }
}

TEST_CASE("quotient of the Lie center matches the operator overlap") {
  for (const auto& a : full_catalog()) {
    CAPTURE(a.name());
    auto chk = lie_center_operator_check(a);
    REQUIRE(chk.lz_mod_z == chk.r_cap_der);
    REQUIRE(a.is_ideal(a.lie_center()));
  }

  // h3, r2+K: the whole algebra is the Lie center (all triple products die),
  // the center is the line it kills, and R equals the inner derivations
  auto h3 = lie_center_operator_check(make_heisenberg3(Q));
  REQUIRE(h3.lz_mod_z == 2);
  auto r2k = lie_center_operator_check(make_r2_plus_line(Q));
  REQUIRE(r2k.lz_mod_z == 2);
  // sl2: trivial center, Lie center everything, R = ad is all derivations
  auto sl2 = lie_center_operator_check(make_sl2(Q));
  REQUIRE(sl2.lz_mod_z == 3);
  // b61: center and Lie center coincide in the last coordinate
  auto b61 = lie_center_operator_check(make_b61(Q, Q.one()));
  REQUIRE(b61.lz_mod_z == 0);
}

TEST_CASE("multiplications and derivations close into a Lie algebra") {
  for (const auto& a : cd_catalog()) {
    CAPTURE(a.name());
    auto s = semidirect_r_der(a);
    REQUIRE(s.dim() == right_mult_space(a).dim() + derivation_algebra(a).dim());
    // brute Jacobi check, independent of the variety scanner
    const int n = s.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          REQUIRE(vec_is_zero(
              Q, s.jacobiator(unit_vec(Q, n, i), unit_vec(Q, n, j), unit_vec(Q, n, k))));
  }
  // on a non-cd algebra some bracket of multiplications is not a derivation
  REQUIRE_THROWS_AS(semidirect_r_der(make_malcev7(Q)), algebra_error);
}
