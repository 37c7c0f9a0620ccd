// Exact coefficient fields: Q (arbitrary precision) and GF(p) for prime p >= 5.
// Every algorithm in this library is templated on a field object F providing
// Elem, zero/one/from_int, ring ops, inv, is_zero, eq, str, parse.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cdalg {

struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Q

class FieldQ {
public:
  using Elem = boost::multiprecision::cpp_rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw field_error("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  long long characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  // lowest terms, positive denominator; denominator 1 is omitted
  std::string str(const Elem& a) const {
    const auto num = boost::multiprecision::numerator(a);
    const auto den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  Elem parse(std::string_view s) const {
    try {
      return Elem(std::string(s));
    } catch (const std::exception&) {
      throw field_error("bad rational scalar '" + std::string(s) + "'");
    }
  }
};

// ---------------------------------------------------------------------------
// GF(p)
//
// Elements carry their modulus so that mixed-modulus arithmetic is caught
// immediately instead of producing garbage.

struct Fp {
  std::int64_t v = 0;
  std::int64_t p = 0;

  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }
};

class FieldFp {
public:
  using Elem = Fp;

  explicit FieldFp(std::int64_t p) : p_(p) {
    if (p == 2 || p == 3) throw field_error("characteristic must differ from 2 and 3");
    if (p < 2 || !prime(p)) throw field_error("GF(p) needs a prime p");
    if (p > (std::int64_t(1) << 31)) throw field_error("modulus too large");  // keeps products in 64 bits
  }

  Elem zero() const { return {0, p_}; }
  Elem one() const { return {1, p_}; }
  Elem from_int(long long n) const {
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return {r, p_};
  }

  Elem add(const Elem& a, const Elem& b) const { return {norm(a.v + b.v), p_}; }
  Elem sub(const Elem& a, const Elem& b) const { return {norm(a.v - b.v + p_), p_}; }
  Elem mul(const Elem& a, const Elem& b) const { check(a); check(b); return {norm(a.v * b.v), p_}; }
  Elem neg(const Elem& a) const { return a.v == 0 ? a : Elem{p_ - a.v, p_}; }
  Elem inv(const Elem& a) const {
    if (a.v == 0) throw field_error("division by zero");
    // a^(p-2), p is small enough for 64-bit products after reduction
    std::int64_t r = 1, base = a.v, e = p_ - 2;
    while (e) {
      if (e & 1) r = norm(r * base);
      base = norm(base * base);
      e >>= 1;
    }
    return {r, p_};
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a.v == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a.v == b.v; }

  long long characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  // canonical residue in [0, p)
  std::string str(const Elem& a) const { return std::to_string(a.v); }

  // accepts integers and a/b (read as a * b^-1)
  Elem parse(std::string_view s) const {
    auto slash = s.find('/');
    if (slash != std::string_view::npos)
      return div(parse(s.substr(0, slash)), parse(s.substr(slash + 1)));
    try {
      size_t used = 0;
      long long n = std::stoll(std::string(s), &used);
      if (used != s.size()) throw field_error("");
      return from_int(n);
    } catch (const std::exception&) {
      throw field_error("bad GF(p) scalar '" + std::string(s) + "'");
    }
  }

private:
  std::int64_t p_;

  std::int64_t norm(std::int64_t x) const { return x % p_; }
  void check(const Elem& a) const {
    if (a.p != 0 && a.p != p_) throw field_error("mixed moduli");
  }

  static bool prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }
};

}  // namespace cdalg
