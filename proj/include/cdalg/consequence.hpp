// T-ideal style consequence engine, restricted to one multilinear multidegree
// at a time. The consequence space of a set of identities inside the
// multilinear component of degree d is spanned by all variable renamings of
// every generator raised to degree d, where one raising step of an element e
// is either e*w for a fresh variable w, or the substitution v -> vw applied to
// one variable v of e. Membership in that span certifies derivability; failure
// certifies nothing beyond the chosen degree.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "cdalg/free_element.hpp"
#include "cdalg/subspace.hpp"

namespace cdalg {

template <class F>
struct ConsequenceSpace {
  std::vector<int> target_vars;  // sorted, all distinct
  std::vector<Word> basis;       // multilinear monomial basis in target_vars
  Subspace<F> space;             // span of the generated rows, coordinates in `basis`
};

namespace detail {

// one raising step: from degree k multilinear to degree k+1 multilinear
template <class F>
std::vector<FreeElement<F>> raise_once(const F& f, const FreeElement<F>& e, int fresh) {
  std::vector<FreeElement<F>> out;
  auto w = FreeElement<F>::variable(f, fresh);
  out.push_back(FreeElement<F>::product(f, e, w));
  for (int v : e.variables()) {
    auto vw = FreeElement<F>::product(f, FreeElement<F>::variable(f, v), w);
    out.push_back(e.substitute(f, v, vw));
  }
  return out;
}

inline void all_bijections(const std::vector<int>& from, const std::vector<int>& to,
                           std::vector<std::map<int, int>>& out) {
  std::vector<int> perm = to;
  std::sort(perm.begin(), perm.end());
  do {
    std::map<int, int> m;
    for (size_t i = 0; i < from.size(); ++i) m[from[i]] = perm[i];
    out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

template <class F>
ConsequenceSpace<F> consequence_space(const F& f, const std::vector<FreeElement<F>>& generators,
                                      std::vector<int> target_vars) {
  std::sort(target_vars.begin(), target_vars.end());
  if (std::adjacent_find(target_vars.begin(), target_vars.end()) != target_vars.end())
    throw identity_error("target variables must be distinct");
  const int d = int(target_vars.size());

  ConsequenceSpace<F> cs;
  cs.target_vars = target_vars;
  cs.basis = multilinear_basis(target_vars);

  std::vector<Vec<F>> rows;
  for (const auto& gen : generators) {
    auto ml = multilinearize_one(f, gen);
    if (ml.is_zero()) continue;
    auto vars = ml.variables();
    if (int(vars.size()) > d) throw identity_error("generator degree exceeds the target degree");

    std::vector<FreeElement<F>> level{ml};
    int degree = int(vars.size());
    while (degree < d) {
      std::vector<FreeElement<F>> next;
      for (const auto& e : level) {
        auto evars = e.variables();
        int fresh = std::max(target_vars.back(), *evars.rbegin()) + 1;
        auto raised = detail::raise_once(f, e, fresh);
        next.insert(next.end(), raised.begin(), raised.end());
      }
      level = std::move(next);
      ++degree;
    }

    for (const auto& e : level) {
      auto evars_set = e.variables();
      if (int(evars_set.size()) != d) continue;  // a raising step can collapse; nothing to emit
      std::vector<int> evars(evars_set.begin(), evars_set.end());
      std::vector<std::map<int, int>> renamings;
      detail::all_bijections(evars, target_vars, renamings);
      for (const auto& m : renamings) {
        auto r = e.rename(f, m);
        if (!r.is_zero()) rows.push_back(r.vectorize(f, cs.basis));
      }
    }
  }
  cs.space = Subspace<F>::span(f, rows, int(cs.basis.size()));
  return cs;
}

template <class F>
struct ConsequenceResult {
  bool derivable = false;
  ConsequenceSpace<F> space;
  Vec<F> target_coords;                 // candidate in the monomial basis
  std::optional<Vec<F>> certificate;    // coordinates in space.space's canonical basis
};

template <class F>
ConsequenceResult<F> is_consequence(const F& f, const std::vector<FreeElement<F>>& generators,
                                    const FreeElement<F>& candidate) {
  auto ml = multilinearize_one(f, candidate);
  ConsequenceResult<F> res;
  if (ml.is_zero()) {
    res.derivable = true;
    res.certificate = Vec<F>{};
    return res;
  }
  auto vars_set = ml.variables();
  std::vector<int> vars(vars_set.begin(), vars_set.end());
  res.space = consequence_space(f, generators, vars);
  res.target_coords = ml.vectorize(f, res.space.basis);
  res.certificate = res.space.space.coordinates(f, res.target_coords);
  res.derivable = res.certificate.has_value();
  return res;
}

}  // namespace cdalg
