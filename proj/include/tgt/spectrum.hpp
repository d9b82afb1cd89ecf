#pragma once

// Filters on the idempotent semilattice of a finite inverse semigroup:
// all filters, ultrafilters, and the tight ones. Tightness is computed two
// independent ways (closure of ultrafilters; the cover criterion) and the
// two answers are required to agree.

#include <set>

#include "tgt/inverse_semigroup.hpp"

namespace tgt {

struct Filter {
  std::vector<int> members;  // sorted, zero never present
  int minimum = -1;          // generating idempotent (finite case: the least member)
  bool ultra = false;

  bool contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
  }
  bool operator==(const Filter& o) const { return members == o.members; }
};

// {f in E(S) : a <= f for some a in A}
inline std::vector<int> up_closure(const InverseSemigroup& S,
                                   const std::vector<int>& A) {
  std::vector<int> r;
  for (int f : S.idempotents()) {
    for (int a : A)
      if (S.leq(a, f)) {
        r.push_back(f);
        break;
      }
  }
  return r;
}

inline Filter principal_filter(const InverseSemigroup& S, int e) {
  if (!S.is_idempotent(e) || e == S.zero)
    throw Error(ErrKind::PreconditionE,
                S.elements[e] + " is not a nonzero idempotent", e);
  Filter f;
  f.members = up_closure(S, {e});
  f.minimum = e;
  return f;
}

// In a finite semilattice every filter is a principal up-set of a nonzero
// idempotent; one filter per such idempotent, sorted by generator index.
inline std::vector<Filter> all_filters(const InverseSemigroup& S) {
  std::vector<Filter> out;
  for (int e : S.nonzero_idempotents()) out.push_back(principal_filter(S, e));
  for (auto& f : out) {
    // maximal iff the generator is a minimal nonzero idempotent
    bool minimal = true;
    for (int g : S.nonzero_idempotents())
      if (g != f.minimum && S.leq(g, f.minimum)) {
        minimal = false;
        break;
      }
    f.ultra = minimal;
  }
  return out;
}

// Brute enumeration over subsets of E(S)\{0}; cross-validates all_filters.
inline std::vector<Filter> filters_exhaustive(const InverseSemigroup& S) {
  auto E = S.nonzero_idempotents();
  size_t k = E.size();
  if (k > 20) throw Error(ErrKind::SizeLimit, "exhaustive filter scan needs |E| <= 20");
  std::vector<Filter> out;
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<int> mem;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) mem.push_back(E[i]);
    bool ok = true;
    for (int e : mem) {  // meet-closed (equivalently down-directed)
      for (int f : mem) {
        int m = S.mul(e, f);
        if (m == S.zero || !std::binary_search(mem.begin(), mem.end(), m)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)  // upward closed
      for (int e : mem) {
        for (int g : E)
          if (S.leq(e, g) && !std::binary_search(mem.begin(), mem.end(), g)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
    if (!ok) continue;
    Filter f;
    f.members = mem;
    int mn = mem[0];
    for (int e : mem)
      if (S.leq(e, mn)) mn = e;
    f.minimum = mn;
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(),
            [](const Filter& a, const Filter& b) { return a.minimum < b.minimum; });
  return out;
}

namespace detail {

// does any subset of the nonzero idempotents below e cover e while missing xi?
inline bool has_cover_missing(const InverseSemigroup& S, int e, const Filter& xi) {
  auto below = S.idempotents_below(e);
  size_t k = below.size();
  if (k > 20) throw Error(ErrKind::SizeLimit, "cover scan needs small down-sets");
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<int> C;
    bool disjoint = true;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) {
        C.push_back(below[i]);
        if (xi.contains(below[i])) disjoint = false;
      }
    if (!disjoint) continue;
    if (is_cover(S, C, below).ok) return true;
  }
  return false;
}

}  // namespace detail

// xi is tight iff every cover of every member meets xi
inline bool is_tight_by_covers(const InverseSemigroup& S, const Filter& xi) {
  for (int e : xi.members)
    if (detail::has_cover_missing(S, e, xi)) return false;
  return true;
}

// xi lies in the closure of the ultrafilter set iff every neighbourhood
// determined by a finite idempotent set contains an agreeing ultrafilter;
// with F = E(S) this is agreement everywhere.
inline bool is_tight_by_closure(const InverseSemigroup& S, const Filter& xi,
                                const std::vector<Filter>& ultra) {
  for (const Filter& u : ultra) {
    bool agree = true;
    for (int e : S.idempotents())
      if (xi.contains(e) != u.contains(e)) {
        agree = false;
        break;
      }
    if (agree) return true;
  }
  return false;
}

class TightSpectrum {
 public:
  std::vector<Filter> tight;   // sorted by generating idempotent index
  int filter_count = 0;
  int ultrafilter_count = 0;

  // positions within `tight` whose filter contains e
  std::vector<int> d_set(int e) const {
    if (e < 0 || e >= static_cast<int>(d_.size()) || !is_idem_[e])
      throw Error(ErrKind::PreconditionE, "D-set of a non-idempotent", e);
    return d_[e];
  }

  // U(x, Y) = D_x minus the union of D_y over y in Y
  std::vector<int> u_set(int x, const std::vector<int>& Y) const {
    auto base = d_set(x);
    std::set<int> cut;
    for (int y : Y)
      for (int i : d_set(y)) cut.insert(i);
    std::vector<int> r;
    for (int i : base)
      if (!cut.count(i)) r.push_back(i);
    return r;
  }

  int index_of(const Filter& f) const {
    for (size_t i = 0; i < tight.size(); ++i)
      if (tight[i] == f) return static_cast<int>(i);
    return -1;
  }

  friend TightSpectrum tight_spectrum(const InverseSemigroup& S);

 private:
  std::vector<std::vector<int>> d_;
  std::vector<char> is_idem_;
};

inline TightSpectrum tight_spectrum(const InverseSemigroup& S) {
  auto filters = all_filters(S);
  std::vector<Filter> ultra;
  for (const auto& f : filters)
    if (f.ultra) ultra.push_back(f);

  TightSpectrum sp;
  sp.filter_count = static_cast<int>(filters.size());
  sp.ultrafilter_count = static_cast<int>(ultra.size());
  for (const auto& f : filters) {
    bool t1 = is_tight_by_covers(S, f);
    bool t2 = is_tight_by_closure(S, f, ultra);
    if (t1 != t2)
      throw Error(ErrKind::CharacterizationMismatch,
                  "cover and closure tightness disagree at the filter of " +
                      S.elements[f.minimum],
                  f.minimum);
    if (t1) sp.tight.push_back(f);
  }
  std::sort(sp.tight.begin(), sp.tight.end(),
            [](const Filter& a, const Filter& b) { return a.minimum < b.minimum; });
  sp.is_idem_.assign(S.size(), 0);
  for (int e : S.idempotents()) sp.is_idem_[e] = 1;
  sp.d_.assign(S.size(), {});
  for (int e : S.idempotents())
    for (size_t i = 0; i < sp.tight.size(); ++i)
      if (sp.tight[i].contains(e)) sp.d_[e].push_back(static_cast<int>(i));
  return sp;
}

}  // namespace tgt
