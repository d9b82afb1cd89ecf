#pragma once

// Weakly fixed idempotents, the inverse subsemigroup of elements acting as
// local identities, the idempotent centralizer, 0-disjunctivity, the
// finite-cover condition on fixed idempotents, and the Z-regions of the
// tight spectrum entering the conditional expectation.

#include "tgt/spectrum.hpp"

namespace tgt {

// e <= s*s and sfs*f != 0 for every nonzero idempotent f <= e.
// Vacuously true at e = 0.
inline bool is_weakly_fixed(const InverseSemigroup& S, int s, int e) {
  int dom = S.mul(S.star(s), s);
  if (!S.is_idempotent(e) || !S.leq(e, dom))
    throw Error(ErrKind::PreconditionE,
                S.elements[e] + " is not an idempotent below " +
                    S.elements[S.star(s)] + S.elements[s],
                s, e);
  for (int f : S.idempotents_below(e)) {
    int x = S.mul(S.mul(S.mul(s, f), S.star(s)), f);
    if (x == S.zero) return false;
  }
  return true;
}

// W_s: the nonzero weakly fixed idempotents of s
inline std::vector<int> weakly_fixed_set(const InverseSemigroup& S, int s) {
  std::vector<int> w;
  int dom = S.mul(S.star(s), s);
  for (int e : S.idempotents_below(dom))
    if (is_weakly_fixed(S, s, e)) w.push_back(e);
  return w;
}

// s*s is weakly fixed by s (vacuously so when s*s = 0)
inline bool in_s_iso(const InverseSemigroup& S, int s) {
  int dom = S.mul(S.star(s), s);
  if (dom == S.zero) return true;
  return is_weakly_fixed(S, s, dom);
}

inline std::vector<int> s_iso(const InverseSemigroup& S) {
  std::vector<int> r;
  for (int s = 0; s < S.size(); ++s)
    if (in_s_iso(S, s)) r.push_back(s);
  return r;
}

// elements commuting with every idempotent
inline std::vector<int> centralizer(const InverseSemigroup& S) {
  std::vector<int> r;
  for (int s = 0; s < S.size(); ++s) {
    bool central = true;
    for (int e : S.idempotents())
      if (S.mul(s, e) != S.mul(e, s)) {
        central = false;
        break;
      }
    if (central) r.push_back(s);
  }
  return r;
}

struct ZeroDisjunctive {
  bool ok = true;
  int e = -1, f = -1;  // witness pair 0 < e < f admitting no disjoint e' < f
};

// for all 0 < e < f there is 0 < e' < f with ee' = 0
inline ZeroDisjunctive is_zero_disjunctive(const InverseSemigroup& S) {
  for (int f : S.nonzero_idempotents())
    for (int e : S.idempotents_below(f)) {
      if (e == f) continue;
      bool found = false;
      for (int e2 : S.idempotents_below(f)) {
        if (e2 == f) continue;
        if (S.mul(e, e2) == S.zero) {
          found = true;
          break;
        }
      }
      if (!found) return {false, e, f};
    }
  return {true, -1, -1};
}

struct ZeroDisjunctiveLemma {
  bool applicable = false;  // S is 0-disjunctive
  bool ok = true;
  std::string detail;
};

// In a 0-disjunctive S: the centralizer equals S^iso, and each of its
// members satisfies s*s = ss* and ses* = e for every idempotent e <= s*s.
inline ZeroDisjunctiveLemma lemma_0dis_check(const InverseSemigroup& S) {
  ZeroDisjunctiveLemma r;
  if (!is_zero_disjunctive(S).ok) return r;
  r.applicable = true;
  if (centralizer(S) != s_iso(S)) {
    r.ok = false;
    r.detail = "centralizer differs from the local-identity subsemigroup";
    return r;
  }
  for (int s : s_iso(S)) {
    int dom = S.mul(S.star(s), s), ran = S.mul(s, S.star(s));
    if (dom != ran) {
      r.ok = false;
      r.detail = "s*s != ss* at " + S.elements[s];
      return r;
    }
    for (int e : S.idempotents_below(dom))
      if (S.mul(S.mul(s, e), S.star(s)) != e) {
        r.ok = false;
        r.detail = "ses* != e at s=" + S.elements[s] + ", e=" + S.elements[e];
        return r;
      }
  }
  return r;
}

struct ConditionH {
  bool ok = true;
  // per element: the fixed idempotents J_s = {e : se = e} and the witness cover
  std::vector<std::vector<int>> j_sets;
  std::vector<std::vector<int>> witness_covers;
};

// every J_s admits a finite cover; in the finite case J_s \ {0} always works
inline ConditionH condition_h(const InverseSemigroup& S) {
  ConditionH r;
  r.j_sets.resize(S.size());
  r.witness_covers.resize(S.size());
  for (int s = 0; s < S.size(); ++s) {
    std::vector<int> j;
    for (int e : S.idempotents())
      if (S.mul(s, e) == e) j.push_back(e);
    std::vector<int> cover;
    for (int e : j)
      if (e != S.zero) cover.push_back(e);
    if (!cover.empty() && !is_cover(S, cover, cover).ok) r.ok = false;
    r.j_sets[s] = std::move(j);
    r.witness_covers[s] = std::move(cover);
  }
  return r;
}

inline std::vector<int> maximal_elements(const InverseSemigroup& S,
                                         const std::vector<int>& A) {
  std::vector<int> r;
  for (int e : A) {
    bool maximal = true;
    for (int f : A)
      if (f != e && S.leq(e, f)) {
        maximal = false;
        break;
      }
    if (maximal) r.push_back(e);
  }
  return r;
}

struct ZRegion {
  std::vector<int> w;      // W_s
  std::vector<int> cover;  // canonical cover of W_s (its maximal elements)
  std::vector<int> z;      // tight-spectrum positions, sorted
};

// Z_s = union of D_c over a finite cover C of W_s; the choice of cover does
// not matter, which is re-verified here with the full W_s as a second cover.
inline ZRegion z_region(const InverseSemigroup& S, const TightSpectrum& sp, int s) {
  ZRegion r;
  r.w = weakly_fixed_set(S, s);
  if (r.w.empty()) return r;
  r.cover = maximal_elements(S, r.w);
  auto union_of = [&](const std::vector<int>& C) {
    std::set<int> u;
    for (int c : C)
      for (int i : sp.d_set(c)) u.insert(i);
    return std::vector<int>(u.begin(), u.end());
  };
  r.z = union_of(r.cover);
  if (r.cover.size() != r.w.size() && union_of(r.w) != r.z)
    throw Error(ErrKind::CharacterizationMismatch,
                "Z-region depends on the chosen cover of W_s", s);
  return r;
}

}  // namespace tgt
