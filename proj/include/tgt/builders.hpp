#pragma once

// Bundled finite inverse semigroups used throughout the tests and the CLI.

#include <array>
#include <functional>
#include <map>
#include <set>

#include "tgt/inverse_semigroup.hpp"

namespace tgt::builders {

namespace detail {

// partial injective map on {0..n-1}; -1 marks "undefined"
using PMap = std::vector<int>;

inline PMap pmap_compose(const PMap& f, const PMap& g) {  // x -> f(g(x))
  PMap h(g.size(), -1);
  for (size_t x = 0; x < g.size(); ++x)
    if (g[x] >= 0 && f[g[x]] >= 0) h[x] = f[g[x]];
  return h;
}

inline PMap pmap_inverse(const PMap& f) {
  PMap h(f.size(), -1);
  for (size_t x = 0; x < f.size(); ++x)
    if (f[x] >= 0) h[f[x]] = static_cast<int>(x);
  return h;
}

inline bool pmap_injective(const PMap& f) {
  std::set<int> seen;
  for (int v : f)
    if (v >= 0 && !seen.insert(v).second) return false;
  return true;
}

inline std::string pmap_name(const PMap& f) {
  bool empty = true, ident = true;
  for (size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= 0) empty = false;
    if (f[x] >= 0 && f[x] != static_cast<int>(x)) ident = false;
  }
  if (empty) return "0";
  if (ident) {
    std::string s = "e";
    for (size_t x = 0; x < f.size(); ++x)
      if (f[x] >= 0) s += std::to_string(x + 1);
    return s;
  }
  std::string s = "[";
  bool first = true;
  for (size_t x = 0; x < f.size(); ++x) {
    if (f[x] < 0) continue;
    if (!first) s += ",";
    first = false;
    s += std::to_string(x + 1) + ":" + std::to_string(f[x] + 1);
  }
  return s + "]";
}

inline InverseSemigroup from_pmaps(std::vector<PMap> maps, std::string name,
                                   const std::map<std::string, std::string>& rename = {}) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  // put the empty map first so reports read naturally
  std::stable_sort(maps.begin(), maps.end(), [](const PMap& a, const PMap& b) {
    auto rank = [](const PMap& m) {
      for (int v : m)
        if (v >= 0) return 1;
      return 0;
    };
    return rank(a) < rank(b);
  });
  auto index = [&](const PMap& m) {
    return static_cast<int>(std::find(maps.begin(), maps.end(), m) - maps.begin());
  };
  RawSemigroup raw;
  raw.name = std::move(name);
  int n = static_cast<int>(maps.size());
  raw.mul.assign(n, std::vector<int>(n));
  raw.star.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) raw.mul[i][j] = index(pmap_compose(maps[i], maps[j]));
    raw.star[i] = index(pmap_inverse(maps[i]));
    std::string nm = pmap_name(maps[i]);
    if (auto it = rename.find(nm); it != rename.end()) nm = it->second;
    raw.elements.push_back(nm);
  }
  raw.zero = index(PMap(maps[0].size(), -1));
  return validate(raw);
}

}  // namespace detail

// 2x2 matrix units and zero: {0, a, a*, aa*, a*a}
inline InverseSemigroup brandt2() {
  // encode nonzero elements as pairs (i,j), product (i,j)(k,l) = (i,l) iff j==k
  const std::array<std::pair<int, int>, 4> units = {{{1, 2}, {2, 1}, {1, 1}, {2, 2}}};
  const std::array<std::string, 5> names = {"0", "a", "a*", "aa*", "a*a"};
  auto idx = [&](int i, int j) {
    for (size_t k = 0; k < units.size(); ++k)
      if (units[k] == std::make_pair(i, j)) return static_cast<int>(k) + 1;
    return 0;
  };
  RawSemigroup raw;
  raw.name = "brandt2";
  raw.elements.assign(names.begin(), names.end());
  raw.mul.assign(5, std::vector<int>(5, 0));
  raw.star.assign(5, 0);
  for (int p = 1; p <= 4; ++p) {
    auto [i, j] = units[p - 1];
    raw.star[p] = idx(j, i);
    for (int q = 1; q <= 4; ++q) {
      auto [k, l] = units[q - 1];
      raw.mul[p][q] = (j == k) ? idx(i, l) : 0;
    }
  }
  raw.zero = 0;
  return validate(raw);
}

// all partial injective maps on an n-point set, n <= 3
inline InverseSemigroup symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 3)
    throw Error(ErrKind::BadInput, "symmetric_inverse_monoid: n must be 1..3");
  std::vector<detail::PMap> maps;
  std::vector<int> cur(n, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (detail::pmap_injective(cur)) maps.push_back(cur);
      return;
    }
    for (int v = -1; v < n; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = -1;
  };
  rec(0);
  return detail::from_pmaps(std::move(maps), "symm" + std::to_string(n));
}

// meet-semilattice from a partial order with a least element; star is trivial
inline InverseSemigroup semilattice(const std::vector<std::vector<char>>& leq,
                                    std::vector<std::string> names = {},
                                    std::string name = "semilattice") {
  int n = static_cast<int>(leq.size());
  if (n == 0) throw Error(ErrKind::BadShape, "empty order");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(leq[i].size()) != n)
      throw Error(ErrKind::BadShape, "order matrix not square");
  for (int i = 0; i < n; ++i) {
    if (!leq[i][i]) throw Error(ErrKind::NotSemilattice, "not reflexive", i);
    for (int j = 0; j < n; ++j) {
      if (leq[i][j] && leq[j][i] && i != j)
        throw Error(ErrKind::NotSemilattice, "not antisymmetric", i, j);
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw Error(ErrKind::NotSemilattice, "not transitive", i, j, k);
    }
  }
  RawSemigroup raw;
  raw.name = std::move(name);
  raw.elements = std::move(names);
  raw.mul.assign(n, std::vector<int>(n));
  raw.star.resize(n);
  for (int i = 0; i < n; ++i) {
    raw.star[i] = i;
    for (int j = 0; j < n; ++j) {
      int m = -1;
      for (int k = 0; k < n; ++k) {
        if (!(leq[k][i] && leq[k][j])) continue;
        bool top = true;
        for (int l = 0; l < n && top; ++l)
          if (leq[l][i] && leq[l][j] && !leq[l][k]) top = false;
        if (top) {
          if (m >= 0 && m != k)
            throw Error(ErrKind::NotSemilattice, "meet not unique", i, j);
          m = k;
        }
      }
      if (m < 0) throw Error(ErrKind::NotSemilattice, "meet missing", i, j);
      raw.mul[i][j] = m;
    }
  }
  int min = -1;
  for (int k = 0; k < n; ++k) {
    bool least = true;
    for (int i = 0; i < n && least; ++i) least = leq[k][i];
    if (least) min = k;
  }
  if (min < 0) throw Error(ErrKind::NotSemilattice, "no least element");
  raw.zero = min;
  return validate(raw);
}

// the chain 0 < e < 1
inline InverseSemigroup chain3() {
  std::vector<std::vector<char>> leq = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  return semilattice(leq, {"0", "e", "1"}, "chain3");
}

// boolean semilattice on two atoms: 0 < a,b < ab
inline InverseSemigroup bool2() {
  std::vector<std::vector<char>> leq = {
      {1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  return semilattice(leq, {"0", "a", "b", "ab"}, "bool2");
}

// a finite group with a fresh zero adjoined; star is group inversion
inline InverseSemigroup group_with_zero(const std::vector<std::vector<int>>& table,
                                        std::vector<std::string> names = {},
                                        std::string name = "group0") {
  int g = static_cast<int>(table.size());
  if (g == 0) throw Error(ErrKind::BadShape, "empty group table");
  int id = -1;
  for (int e = 0; e < g; ++e) {
    bool ok = true;
    for (int s = 0; s < g && ok; ++s)
      ok = table[e][s] == s && table[s][e] == s;
    if (ok) id = e;
  }
  if (id < 0) throw Error(ErrKind::BadInput, "group table has no identity");
  RawSemigroup raw;
  raw.name = std::move(name);
  int n = g + 1;
  raw.mul.assign(n, std::vector<int>(n, g));
  raw.star.assign(n, g);
  for (int i = 0; i < g; ++i) {
    int inv = -1;
    for (int j = 0; j < g; ++j)
      if (table[i][j] == id && table[j][i] == id) inv = j;
    if (inv < 0) throw Error(ErrKind::BadInput, "group element lacks an inverse", i);
    raw.star[i] = inv;
    for (int j = 0; j < g; ++j) raw.mul[i][j] = table[i][j];
  }
  if (names.empty()) {
    names.push_back("1");
    for (int i = 1; i < g; ++i) names.push_back("g" + std::to_string(i));
  }
  names.push_back("0");
  raw.elements = std::move(names);
  raw.zero = g;
  return validate(raw);
}

// Z/2 with zero: {1, g, 0}
inline InverseSemigroup z2_with_zero() {
  return group_with_zero({{0, 1}, {1, 0}}, {"1", "g"}, "z2zero");
}

// closure in I({1,2,3}) of {id on {1,2}, id on {1,3}, the transposition (2 3)},
// with the empty map adjoined: 8 elements
inline InverseSemigroup swap_monoid() {
  using detail::PMap;
  std::vector<PMap> gens = {{0, 1, -1}, {0, -1, 2}, {0, 2, 1}};
  std::set<PMap> closed(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PMap> cur(closed.begin(), closed.end());
    for (const auto& f : cur) {
      if (closed.insert(detail::pmap_inverse(f)).second) grew = true;
      for (const auto& g : cur)
        if (closed.insert(detail::pmap_compose(f, g)).second) grew = true;
    }
  }
  closed.insert(PMap{-1, -1, -1});
  std::map<std::string, std::string> rename = {
      {"[1:1,2:3,3:2]", "s"}, {"[1:1,2:3]", "t"}, {"[1:1,3:2]", "t*"}};
  return detail::from_pmaps({closed.begin(), closed.end()}, "swap", rename);
}

inline std::vector<std::string> builder_names() {
  return {"brandt2", "symm1", "symm2", "symm3", "chain3", "bool2", "z2zero", "swap"};
}

inline InverseSemigroup by_name(const std::string& nm) {
  if (nm == "brandt2") return brandt2();
  if (nm == "symm1") return symmetric_inverse_monoid(1);
  if (nm == "symm2") return symmetric_inverse_monoid(2);
  if (nm == "symm3") return symmetric_inverse_monoid(3);
  if (nm == "chain3") return chain3();
  if (nm == "bool2") return bool2();
  if (nm == "z2zero") return z2_with_zero();
  if (nm == "swap") return swap_monoid();
  throw Error(ErrKind::BadInput, "unknown builder '" + nm + "'");
}

}  // namespace tgt::builders
