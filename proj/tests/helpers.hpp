#pragma once

#include <random>

#include "tgt/inverse_semigroup.hpp"

namespace testutil {

// reconstruct the raw tables of a validated semigroup
inline tgt::RawSemigroup raw_of(const tgt::InverseSemigroup& S) {
  tgt::RawSemigroup raw;
  raw.name = S.name;
  raw.elements = S.elements;
  int n = S.size();
  raw.mul.assign(n, std::vector<int>(n));
  raw.star.resize(n);
  for (int i = 0; i < n; ++i) {
    raw.star[i] = S.star(i);
    for (int j = 0; j < n; ++j) raw.mul[i][j] = S.mul(i, j);
  }
  raw.zero = S.zero;
  return raw;
}

// Independent mini-validator mirroring the documented check order; used as
// the oracle for error-class assertions on mutated tables.
inline std::optional<tgt::ErrKind> oracle_reject_kind(const tgt::RawSemigroup& raw) {
  using tgt::ErrKind;
  int n = static_cast<int>(raw.mul.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (raw.mul[i][j] < 0 || raw.mul[i][j] >= n) return ErrKind::BadShape;
  if (raw.zero) {
    int z = *raw.zero;
    for (int s = 0; s < n; ++s)
      if (raw.mul[z][s] != z || raw.mul[s][z] != z) return ErrKind::BadZero;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (raw.mul[raw.mul[i][j]][k] != raw.mul[i][raw.mul[j][k]])
          return ErrKind::NonAssociative;
  for (int s = 0; s < n; ++s) {
    int found = -1;
    for (int t = 0; t < n; ++t) {
      if (raw.mul[raw.mul[s][t]][s] == s && raw.mul[raw.mul[t][s]][t] == t) {
        if (found >= 0) return ErrKind::NonUniqueInverse;
        found = t;
      }
    }
    if (found < 0) return ErrKind::NoInverse;
    if (raw.star[s] != found) return ErrKind::StarMismatch;
  }
  return std::nullopt;
}

inline std::mt19937_64 rng(unsigned long long seed = 0) { return std::mt19937_64(seed); }

}  // namespace testutil
