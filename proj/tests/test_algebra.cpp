#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "cdalg/algebra_io.hpp"
#include "cdalg/catalog.hpp"

using namespace cdalg;

namespace {

const FieldQ Q;

template <class F>
bool same_table(const Algebra<F>& a, const Algebra<F>& b) {
  if (a.dim() != b.dim()) return false;
  const auto& f = a.field();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (!f.eq(a.c(i, j, k), b.c(i, j, k))) return false;
  return true;
}

template <class F>
Vec<F> e(const F& f, int n, int i) {
  return unit_vec(f, n, i);
}

std::vector<Algebra<FieldQ>> rational_catalog() {
  return {make_abelian(Q, 3),   make_r2(Q),
          make_r2_plus_line(Q), make_heisenberg3(Q),
          make_sl2(Q),          make_b61(Q, Q.one()),
          make_malcev7(Q),      make_free_anticommutative(Q, 3, 2)};
}

}  // namespace

TEST_CASE("catalog structure constants") {
  auto h3 = make_heisenberg3(Q);
  REQUIRE(vec_eq(Q, h3.mul_basis(0, 1), e(Q, 3, 2)));
  REQUIRE(vec_eq(Q, h3.mul_basis(1, 0), vec_neg(Q, e(Q, 3, 2))));
  REQUIRE(vec_is_zero(Q, h3.mul_basis(0, 2)));

  auto sl2 = make_sl2(Q);
  REQUIRE(Q.eq(sl2.c(0, 1, 1), Q.from_int(2)));
  REQUIRE(Q.eq(sl2.c(0, 2, 2), Q.from_int(-2)));
  REQUIRE(Q.eq(sl2.c(1, 2, 0), Q.one()));
  REQUIRE(vec_is_zero(Q, sl2.jacobiator(e(Q, 3, 0), e(Q, 3, 1), e(Q, 3, 2))));

  auto b = make_b61(Q, Q.one());
  REQUIRE(b.dim() == 6);
  REQUIRE(vec_eq(Q, b.mul_basis(0, 1), e(Q, 6, 3)));
  REQUIRE(vec_eq(Q, b.mul_basis(0, 2), e(Q, 6, 4)));
  REQUIRE(vec_eq(Q, b.mul_basis(1, 2), e(Q, 6, 5)));
  REQUIRE(vec_eq(Q, b.mul_basis(3, 4), e(Q, 6, 5)));
  // the only nonzero Jacobiator value on basis triples containing e5:
  // J(e1,e2,e5) = (e1e2)e5 = e4e5 = e6
  REQUIRE(vec_eq(Q, b.jacobiator(e(Q, 6, 0), e(Q, 6, 1), e(Q, 6, 4)), e(Q, 6, 5)));
}

TEST_CASE("octonion commutator table") {
  auto m7 = make_malcev7(Q);
  REQUIRE(m7.dim() == 7);
  // imaginary units anticommute, so the commutator doubles the product
  REQUIRE(Q.eq(m7.c(0, 1, 2), Q.from_int(2)));
  REQUIRE(Q.eq(m7.c(0, 3, 4), Q.from_int(2)));
  REQUIRE(!vec_is_zero(Q, m7.jacobiator(e(Q, 7, 0), e(Q, 7, 1), e(Q, 7, 3))));
}

TEST_CASE("centers of the 6-dimensional family") {
  auto b = make_b61(Q, Q.one());
  auto z = b.center();
  REQUIRE(z.dim() == 1);
  REQUIRE(z.contains(Q, e(Q, 6, 5)));
  auto lz = b.lie_center();
  REQUIRE(lz.dim() == 1);
  REQUIRE(lz.contains(Q, e(Q, 6, 5)));
  REQUIRE(!lz.contains(Q, e(Q, 6, 4)));
}

TEST_CASE("the center is always inside the Lie center") {
  for (const auto& a : rational_catalog()) {
    auto z = a.center();
    auto lz = a.lie_center();
    REQUIRE(lz.contains(Q, z));
  }
}

TEST_CASE("quotients") {
  auto b = make_b61(Q, Q.one());
  auto q = b.quotient(b.center(), "b61/z");
  REQUIRE(q.dim() == 5);
  // killing e6 kills every Jacobiator value
  const int n = q.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        REQUIRE(vec_is_zero(Q, q.jacobiator(e(Q, n, i), e(Q, n, j), e(Q, n, k))));

  auto h3 = make_heisenberg3(Q);
  auto line = Subspace<FieldQ>::span(Q, {e(Q, 3, 0)}, 3);
  REQUIRE(!h3.is_ideal(line));
  REQUIRE_THROWS_AS(h3.quotient(line, "bad"), algebra_error);
  REQUIRE(h3.is_ideal(Subspace<FieldQ>::span(Q, {e(Q, 3, 2)}, 3)));
}

TEST_CASE("direct sums") {
  auto r2k = make_r2_plus_line(Q);
  REQUIRE(r2k.dim() == 3);
  REQUIRE(Q.eq(r2k.c(0, 1, 0), Q.one()));
  REQUIRE(vec_is_zero(Q, r2k.mul_basis(0, 2)));
  REQUIRE(vec_is_zero(Q, r2k.mul_basis(1, 2)));
  REQUIRE(r2k.center().contains(Q, e(Q, 3, 2)));
}

TEST_CASE("constructor guards") {
  Algebra<FieldQ> a(Q, 2, "guard");
  REQUIRE_THROWS_AS(a.add_product(0, 0, 1, Q.one()), algebra_error);
  REQUIRE_THROWS_AS(a.add_product(0, 2, 1, Q.one()), algebra_error);
  REQUIRE_THROWS_AS(make_free_anticommutative(Q, 0, 2), algebra_error);
  REQUIRE_NOTHROW(a.validate());
}

TEMPLATE_TEST_CASE("multiplication is bilinear and alternating", "", FieldQ, FieldFp) {
  auto make_field = [] {
    if constexpr (std::is_same_v<TestType, FieldFp>)
      return FieldFp(7);
    else
      return FieldQ{};
  };
  const auto f = make_field();
  auto a = make_b61(f, f.from_int(-1));
  std::mt19937_64 rng(0x5eed10);
  std::uniform_int_distribution<int> d(-4, 4);
  auto rnd = [&] {
    Vec<TestType> v = zero_vec(f, a.dim());
    for (auto& x : v) x = f.from_int(d(rng));
    return v;
  };
  for (int t = 0; t < 25; ++t) {
    auto u = rnd(), v = rnd(), w = rnd();
    REQUIRE(vec_is_zero(f, a.mul(u, u)));
    REQUIRE(vec_eq(f, a.mul(u, v), vec_neg(f, a.mul(v, u))));
    REQUIRE(vec_eq(f, a.mul(vec_add(f, u, v), w), vec_add(f, a.mul(u, w), a.mul(v, w))));
    auto c = f.from_int(d(rng));
    REQUIRE(vec_eq(f, a.mul(vec_scale(f, c, u), v), vec_scale(f, c, a.mul(u, v))));
  }
}

TEST_CASE("free nilpotent dimensions") {
  REQUIRE(make_free_anticommutative(Q, 3, 1).dim() == 3);
  REQUIRE(make_free_anticommutative(Q, 3, 2).dim() == 6);
  REQUIRE(make_free_anticommutative(Q, 3, 3).dim() == 15);
  REQUIRE(free_degree_dims(3, 3) == std::vector<int>{0, 3, 3, 9});
  REQUIRE(free_degree_dims(2, 4) == std::vector<int>{0, 2, 1, 2, 4});

  // the degree-n multilinear words on n generators form the standard
  // multilinear basis, counted by (2n-3)!!
  for (int n = 2; n <= 4; ++n) {
    int count = 0;
    for (const auto& w : free_word_basis(n, n)) {
      if (w.degree() != n) continue;
      std::map<int, int> mult;
      w.count_vars(mult);
      bool multilinear = int(mult.size()) == n;
      for (const auto& [v, k] : mult) multilinear = multilinear && k == 1;
      if (multilinear) ++count;
    }
    long long expect = 1;
    for (long long k = 2 * n - 3; k > 1; k -= 2) expect *= k;
    REQUIRE(count == expect);
  }

  // graded truncation: products beyond the class vanish
  auto fr = make_free_anticommutative(Q, 2, 2);
  REQUIRE(vec_is_zero(Q, fr.mul(fr.mul_basis(0, 1), e(Q, 3, 0))));
}

static const std::string b61_file =
    "# parametric six-dimensional algebra, alpha = 1\n"
    "field Q\n"
    "dim 6\n"
    "1 2 -> 1*4\n"
    "1 3 -> 1*5\n"
    "2 3 -> 1*6\n"
    "4 5 -> 1*6\n";

TEST_CASE("algebra files load into catalog tables") {
  auto any = load_algebra_string(b61_file, "b61");
  auto* a = std::get_if<Algebra<FieldQ>>(&any);
  REQUIRE(a != nullptr);
  REQUIRE(same_table(*a, make_b61(Q, Q.one())));

  // header and dimension alone give the abelian algebra
  auto ab = load_algebra_string("field Q\ndim 4\n", "ab");
  REQUIRE(std::get<Algebra<FieldQ>>(ab).is_abelian());

  auto gf = load_algebra_string("field GF(7)\ndim 2\n1 2 -> 9*1\n", "gf");
  auto* g = std::get_if<Algebra<FieldFp>>(&gf);
  REQUIRE(g != nullptr);
  REQUIRE(g->field().characteristic() == 7);
  REQUIRE(g->field().eq(g->c(0, 1, 0), g->field().from_int(2)));
}

TEST_CASE("algebra files round-trip byte for byte") {
  for (const auto& a : rational_catalog()) {
    auto text = save_algebra_string(a);
    auto back = load_algebra_string(text, a.name());
    REQUIRE(same_table(std::get<Algebra<FieldQ>>(back), a));
    REQUIRE(save_algebra_string(std::get<Algebra<FieldQ>>(back)) == text);
  }
  // canonical order and signs survive a trip through files on disk
  auto dir = std::filesystem::temp_directory_path() / "cdalg_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "sl2.alg").string();
  save_algebra(make_sl2(Q), path);
  auto loaded = load_algebra(path);
  REQUIRE(std::get<Algebra<FieldQ>>(loaded).name() == "sl2");
  REQUIRE(same_table(std::get<Algebra<FieldQ>>(loaded), make_sl2(Q)));
  std::filesystem::remove_all(dir);
}

namespace {

std::string load_error(const std::string& text) {
  try {
    load_algebra_string(text, "t");
  } catch (const file_error& err) {
    return err.what();
  }
  return "";
}

}  // namespace

TEST_CASE("algebra file errors carry line numbers") {
  using Catch::Matchers::ContainsSubstring;
  REQUIRE_THAT(load_error("dim 2\n"), ContainsSubstring("line 1"));
  REQUIRE_THAT(load_error("field R\ndim 2\n"), ContainsSubstring("unknown field"));
  REQUIRE_THAT(load_error("field GF(4)\ndim 2\n"), ContainsSubstring("line 1"));
  REQUIRE_THAT(load_error("field GF(3)\ndim 2\n"),
               ContainsSubstring("characteristic must differ from 2 and 3"));
  REQUIRE_THAT(load_error("field Q\nsize 2\n"), ContainsSubstring("line 2"));
  REQUIRE_THAT(load_error("field Q\ndim 2\n2 1 -> 1*3\n"),
               ContainsSubstring("products must be listed with i < j"));
  REQUIRE_THAT(load_error("field Q\ndim 2\n1 1 -> 1*2\n"), ContainsSubstring("i < j"));
  REQUIRE_THAT(load_error("field Q\ndim 2\n1 3 -> 1*2\n"), ContainsSubstring("line 3"));
  REQUIRE_THAT(load_error("field Q\ndim 3\n1 2 -> 1*3\n1 2 -> 1*1\n"),
               ContainsSubstring("pair given twice"));
  REQUIRE_THAT(load_error("field Q\ndim 2\n1 2 -> \n"), ContainsSubstring("line 3"));
  REQUIRE_THAT(load_error("field Q\ndim 2\n1 2 -> 1*1 1*2\n"),
               ContainsSubstring("expected '+' or '-'"));
  REQUIRE(load_error(b61_file).empty());
}

TEST_CASE("cochain files") {
  // three columns: scalar values, fiber dimension 1
  auto c1 = load_cochain_string(Q, "1 2 1\n1 3 -2\n", 3);
  REQUIRE(Q.eq(c1.at({0, 1})[0], Q.one()));
  REQUIRE(Q.eq(c1.at({0, 2})[0], Q.from_int(-2)));

  // four columns: values land in a named fiber coordinate
  auto c2 = load_cochain_string(Q, "1 2 2 1/2\n", 3);
  REQUIRE(Q.eq(c2.at({0, 1})[1], Q.parse("1/2")));
  REQUIRE(Q.eq(c2.at({0, 1})[0], Q.zero()));

  // reversed index order folds in with a sign
  auto c3 = load_cochain_string(Q, "2 1 5\n", 2);
  REQUIRE(Q.eq(c3.at({0, 1})[0], Q.from_int(-5)));

  REQUIRE_THROWS_AS(load_cochain_string(Q, "1 1 1\n", 3), file_error);
  REQUIRE_THROWS_AS(load_cochain_string(Q, "1 2 1\n1 3 1 2\n", 3), file_error);  // mixed widths
  REQUIRE_THROWS_AS(load_cochain_string(Q, "1 2 1\n2 1 1\n", 3), file_error);    // duplicate pair
  REQUIRE_THROWS_AS(load_cochain_string(Q, "1 4 1\n", 3), file_error);
}
