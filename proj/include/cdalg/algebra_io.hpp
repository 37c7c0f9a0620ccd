// Text format for algebras and 2-cochains. The writer is canonical: loading a
// saved file and saving again reproduces it byte for byte.
//
//   field Q            (or: field GF(p))
//   dim n
//   i j -> c*k [+ c*k ...]     1-based indices, i < j, one line per pair
#pragma once

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "cdalg/algebra.hpp"
#include "cdalg/cohomology.hpp"

namespace cdalg {

struct file_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AnyAlgebra = std::variant<Algebra<FieldQ>, Algebra<FieldFp>>;

namespace detail {

[[noreturn]] inline void fail_line(int line, const std::string& msg) {
  throw file_error("line " + std::to_string(line) + ": " + msg);
}

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// raw lines with their 1-based numbers, comments and blanks dropped
inline std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.emplace_back(no, t);
  }
  return out;
}

inline long long parse_int(const std::string& s, int line, const char* what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) fail_line(line, std::string("bad ") + what + " '" + s + "'");
    return v;
  } catch (const file_error&) {
    throw;
  } catch (const std::exception&) {
    fail_line(line, std::string("bad ") + what + " '" + s + "'");
  }
}

// "c*k [+ c*k ...]", also accepting '-' between terms
template <class F>
std::vector<std::pair<typename F::Elem, int>> parse_products(const F& f, const std::string& rhs,
                                                             int line) {
  std::vector<std::pair<typename F::Elem, int>> out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == rhs.size()) {
      if (first) fail_line(line, "expected at least one c*k term");
      break;
    }
    bool negate = false;
    if (!first) {
      if (rhs[pos] == '+') {
        ++pos;
      } else if (rhs[pos] == '-') {
        negate = true;
        ++pos;
      } else {
        fail_line(line, "expected '+' or '-' between terms");
      }
      skip_ws();
    }
    size_t star = rhs.find('*', pos);
    if (star == std::string::npos) fail_line(line, "expected coefficient*index");
    auto coeff_str = trim(rhs.substr(pos, star - pos));
    if (coeff_str.empty()) fail_line(line, "missing coefficient");
    typename F::Elem c;
    try {
      c = f.parse(coeff_str);
    } catch (const field_error& e) {
      fail_line(line, e.what());
    }
    if (negate) c = f.neg(c);
    pos = star + 1;
    skip_ws();
    size_t end = pos;
    while (end < rhs.size() && !std::isspace(static_cast<unsigned char>(rhs[end])) &&
           rhs[end] != '+' && rhs[end] != '-')
      ++end;
    auto k = parse_int(rhs.substr(pos, end - pos), line, "basis index");
    out.emplace_back(c, int(k));
    pos = end;
    first = false;
  }
  return out;
}

template <class F>
Algebra<F> parse_body(const F& f, const std::vector<std::pair<int, std::string>>& lines,
                      size_t at, const std::string& name) {
  if (at >= lines.size() || lines[at].second.rfind("dim ", 0) != 0)
    fail_line(at < lines.size() ? lines[at].first : 0, "expected 'dim n'");
  const int dim_line = lines[at].first;
  long long n = parse_int(trim(lines[at].second.substr(4)), dim_line, "dimension");
  if (n < 1) fail_line(dim_line, "dimension must be positive");
  Algebra<F> a(f, int(n), name);
  std::set<std::pair<int, int>> seen;
  for (size_t q = at + 1; q < lines.size(); ++q) {
    const auto& [no, text] = lines[q];
    auto arrow = text.find("->");
    if (arrow == std::string::npos) fail_line(no, "expected 'i j -> products'");
    std::istringstream lhs(text.substr(0, arrow));
    long long i = 0, j = 0;
    std::string tok, extra;
    if (!(lhs >> tok)) fail_line(no, "expected 'i j' before '->'");
    i = parse_int(tok, no, "basis index");
    if (!(lhs >> tok)) fail_line(no, "expected 'i j' before '->'");
    j = parse_int(tok, no, "basis index");
    if (lhs >> extra) fail_line(no, "expected exactly two indices before '->'");
    if (i < 1 || i > n || j < 1 || j > n) fail_line(no, "basis index out of range");
    if (i >= j) fail_line(no, "products must be listed with i < j");
    if (!seen.insert({int(i), int(j)}).second) fail_line(no, "pair given twice");
    for (const auto& [c, k] : parse_products(f, text.substr(arrow + 2), no)) {
      if (k < 1 || k > n) fail_line(no, "basis index out of range");
      a.add_product(int(i) - 1, int(j) - 1, k - 1, c);
    }
  }
  a.validate();
  return a;
}

}  // namespace detail

inline AnyAlgebra load_algebra_string(const std::string& text, const std::string& name) {
  auto lines = detail::content_lines(text);
  if (lines.empty() || lines[0].second.rfind("field ", 0) != 0)
    detail::fail_line(lines.empty() ? 1 : lines[0].first, "expected 'field Q' or 'field GF(p)'");
  auto spec = detail::trim(lines[0].second.substr(6));
  if (spec == "Q") return detail::parse_body(FieldQ{}, lines, 1, name);
  if (spec.rfind("GF(", 0) == 0 && spec.back() == ')') {
    auto p = detail::parse_int(spec.substr(3, spec.size() - 4), lines[0].first, "characteristic");
    try {
      return detail::parse_body(FieldFp(p), lines, 1, name);
    } catch (const field_error& e) {
      detail::fail_line(lines[0].first, e.what());
    }
  }
  detail::fail_line(lines[0].first, "unknown field '" + spec + "'");
}

inline AnyAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw file_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto base = path;
  if (auto slash = base.find_last_of('/'); slash != std::string::npos) base = base.substr(slash + 1);
  if (auto dot = base.find_last_of('.'); dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return load_algebra_string(buf.str(), base);
}

template <class F>
std::string save_algebra_string(const Algebra<F>& a) {
  const F& f = a.field();
  std::string out = "field " + f.name() + "\n";
  out += "dim " + std::to_string(a.dim()) + "\n";
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      auto row = a.table(i, j);
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " ->";
      bool first = true;
      for (const auto& [k, c] : row) {
        out += first ? " " : " + ";
        out += f.str(c) + "*" + std::to_string(k + 1);
        first = false;
      }
      out += "\n";
    }
  return out;
}

template <class F>
void save_algebra(const Algebra<F>& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw file_error("cannot write '" + path + "'");
  out << save_algebra_string(a);
}

// 2-cochain files: 'i j value' per line (trivial coefficients) or
// 'i j k value' (k indexes a coordinate of the coefficient space, whose
// dimension is taken to be the largest k present). i > j stores the negated
// value; a pair may appear once, so non-alternating input cannot be expressed.
template <class F>
Cochain<F> load_cochain_string(const F& f, const std::string& text, int n) {
  auto lines = detail::content_lines(text);
  struct Entry {
    int line, i, j, k;
    typename F::Elem value;
  };
  std::vector<Entry> entries;
  int width = 0;
  for (const auto& [no, text_line] : lines) {
    std::istringstream in(text_line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    if (toks.size() != 3 && toks.size() != 4) detail::fail_line(no, "expected 'i j value' or 'i j k value'");
    if (width == 0) width = int(toks.size());
    if (int(toks.size()) != width) detail::fail_line(no, "mixed 3- and 4-column entries");
    Entry e;
    e.line = no;
    e.i = int(detail::parse_int(toks[0], no, "basis index"));
    e.j = int(detail::parse_int(toks[1], no, "basis index"));
    e.k = width == 4 ? int(detail::parse_int(toks[2], no, "coefficient index")) : 1;
    try {
      e.value = f.parse(toks.back());
    } catch (const field_error& ex) {
      detail::fail_line(no, ex.what());
    }
    if (e.i < 1 || e.i > n || e.j < 1 || e.j > n) detail::fail_line(no, "basis index out of range");
    if (e.i == e.j) detail::fail_line(no, "alternating cochain: indices must differ");
    if (e.k < 1) detail::fail_line(no, "coefficient index must be positive");
    entries.push_back(std::move(e));
  }
  int m = 1;
  for (const auto& e : entries) m = std::max(m, e.k);
  Cochain<F> phi(f, n, m, 2);
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries) {
    int i = e.i - 1, j = e.j - 1;
    auto v = e.value;
    if (i > j) {
      std::swap(i, j);
      v = f.neg(v);
    }
    if (!seen.insert({i, j, e.k}).second) detail::fail_line(e.line, "pair given twice");
    phi.at({i, j})[e.k - 1] = v;
  }
  return phi;
}

template <class F>
Cochain<F> load_cochain(const F& f, const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw file_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_cochain_string(f, buf.str(), n);
}

}  // namespace cdalg
