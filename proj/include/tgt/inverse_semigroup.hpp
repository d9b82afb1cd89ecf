#pragma once

// Finite inverse semigroups as dense multiplication/involution tables,
// with validation, the natural partial order, and the cover relation.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgt {

enum class ErrKind {
  BadShape,
  BadZero,
  NonAssociative,
  NoInverse,
  NonUniqueInverse,
  StarMismatch,
  NotSemilattice,
  CNotSubsetOfD,
  DomainViolation,
  PreconditionE,
  PreconditionSiso,
  PreconditionB,
  SizeLimit,
  CharacterizationMismatch,
  NotFinite,
  BadInput,
  ParseError,
  IoError,
  UnknownSuite,
};

inline const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::BadShape: return "BadShape";
    case ErrKind::BadZero: return "BadZero";
    case ErrKind::NonAssociative: return "NonAssociative";
    case ErrKind::NoInverse: return "NoInverse";
    case ErrKind::NonUniqueInverse: return "NonUniqueInverse";
    case ErrKind::StarMismatch: return "StarMismatch";
    case ErrKind::NotSemilattice: return "NotSemilattice";
    case ErrKind::CNotSubsetOfD: return "CNotSubsetOfD";
    case ErrKind::DomainViolation: return "DomainViolation";
    case ErrKind::PreconditionE: return "PreconditionE";
    case ErrKind::PreconditionSiso: return "PreconditionSiso";
    case ErrKind::PreconditionB: return "PreconditionB";
    case ErrKind::SizeLimit: return "SizeLimit";
    case ErrKind::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrKind::NotFinite: return "NotFinite";
    case ErrKind::BadInput: return "BadInput";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::IoError: return "IoError";
    case ErrKind::UnknownSuite: return "UnknownSuite";
  }
  return "?";
}

// Carries a witness (up to three element indices, -1 when unused).
class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, std::string msg, long a = -1, long b = -1, long c = -1)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + msg),
        kind(kind), a(a), b(b), c(c) {}
  ErrKind kind;
  long a, b, c;
};

// Raw input shape: square tables over element indices, optional zero.
struct RawSemigroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mul;
  std::vector<int> star;
  std::optional<int> zero;
};

class InverseSemigroup {
 public:
  std::string name;
  std::vector<std::string> elements;
  int zero = -1;
  bool zero_adjoined = false;

  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int star(int a) const { return star_[a]; }
  bool is_idempotent(int e) const { return mul(e, e) == e; }
  bool is_zero(int s) const { return s == zero; }

  // all idempotents, ascending index, zero included
  const std::vector<int>& idempotents() const { return idems_; }
  std::vector<int> nonzero_idempotents() const {
    std::vector<int> r;
    for (int e : idems_)
      if (e != zero) r.push_back(e);
    return r;
  }

  // natural partial order: s <= t iff s = t(s*s)
  bool leq(int s, int t) const { return s == mul(t, mul(star(s), s)); }

  // meet in E(S) is the product
  int meet(int e, int f) const { return mul(e, f); }

  // nonzero idempotents below e (e included when nonzero)
  std::vector<int> idempotents_below(int e) const {
    std::vector<int> r;
    for (int f : idems_)
      if (f != zero && leq(f, e)) r.push_back(f);
    return r;
  }

  int index_of(const std::string& nm) const {
    for (int i = 0; i < n_; ++i)
      if (elements[i] == nm) return i;
    throw Error(ErrKind::BadInput, "no element named '" + nm + "'");
  }

  friend InverseSemigroup validate(const RawSemigroup&);

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> star_;
  std::vector<int> idems_;
};

namespace detail {

inline std::optional<int> find_zero(const std::vector<std::vector<int>>& mul) {
  int n = static_cast<int>(mul.size());
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      ok = mul[z][s] == z && mul[s][z] == z;
    if (ok) return z;
  }
  return std::nullopt;
}

}  // namespace detail

// Checks, in order: table shape; zero behaviour (adjoining a fresh zero when
// none exists, flagged); associativity; existence and uniqueness of inverses;
// agreement of the star table with the unique inverse. Witness indices ride
// on the thrown Error.
inline InverseSemigroup validate(const RawSemigroup& raw) {
  auto mul = raw.mul;
  auto star = raw.star;
  auto names = raw.elements;
  int n = static_cast<int>(mul.size());
  if (n == 0) throw Error(ErrKind::BadShape, "empty table");
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != n ||
      static_cast<int>(star.size()) != n)
    throw Error(ErrKind::BadShape, "table sizes disagree");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mul[i].size()) != n)
      throw Error(ErrKind::BadShape, "mul row " + std::to_string(i), i);
    for (int j = 0; j < n; ++j)
      if (mul[i][j] < 0 || mul[i][j] >= n)
        throw Error(ErrKind::BadShape, "mul entry out of range", i, j);
    if (star[i] < 0 || star[i] >= n)
      throw Error(ErrKind::BadShape, "star entry out of range", i);
  }

  int zero;
  bool adjoined = false;
  if (raw.zero) {
    zero = *raw.zero;
    if (zero < 0 || zero >= n)
      throw Error(ErrKind::BadZero, "zero index out of range", zero);
    for (int s = 0; s < n; ++s)
      if (mul[zero][s] != zero || mul[s][zero] != zero)
        throw Error(ErrKind::BadZero, "declared zero is not absorbing at " +
                                          names[s], zero, s);
  } else if (auto z = detail::find_zero(mul)) {
    zero = *z;
  } else {
    zero = n;
    adjoined = true;
    names.push_back("0");
    for (auto& row : mul) row.push_back(zero);
    mul.emplace_back(n + 1, zero);
    star.push_back(zero);
    n += 1;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
          throw Error(ErrKind::NonAssociative,
                      "(" + names[i] + " " + names[j] + ") " + names[k] +
                          " != " + names[i] + " (" + names[j] + " " +
                          names[k] + ")",
                      i, j, k);

  for (int s = 0; s < n; ++s) {
    int found = -1;
    for (int t = 0; t < n; ++t) {
      if (mul[mul[s][t]][s] == s && mul[mul[t][s]][t] == t) {
        if (found >= 0)
          throw Error(ErrKind::NonUniqueInverse,
                      names[s] + " has inverses " + names[found] + " and " +
                          names[t],
                      s, found, t);
        found = t;
      }
    }
    if (found < 0)
      throw Error(ErrKind::NoInverse, names[s] + " has no inverse", s);
    if (star[s] != found)
      throw Error(ErrKind::StarMismatch,
                  "star(" + names[s] + ") = " + names[star[s]] +
                      " but the unique inverse is " + names[found],
                  s, star[s], found);
  }

  InverseSemigroup S;
  S.name = raw.name;
  S.elements = names;
  S.zero = zero;
  S.zero_adjoined = adjoined;
  S.n_ = n;
  S.mul_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S.mul_[static_cast<size_t>(i) * n + j] = mul[i][j];
  S.star_ = star;
  for (int e = 0; e < n; ++e)
    if (mul[e][e] == e) S.idems_.push_back(e);
  return S;
}

struct CoverResult {
  bool ok = true;
  int uncovered = -1;  // witness: nonzero element of D met by no member of C
};

// C covers D iff every nonzero e in D satisfies ec != 0 for some c in C.
// C must be a subset of D.
inline CoverResult is_cover(const InverseSemigroup& S, const std::vector<int>& C,
                            const std::vector<int>& D) {
  for (int c : C)
    if (std::find(D.begin(), D.end(), c) == D.end())
      throw Error(ErrKind::CNotSubsetOfD,
                  S.elements[c] + " is in C but not in D", c);
  for (int e : D) {
    if (e == S.zero) continue;
    bool met = false;
    for (int c : C)
      if (S.mul(e, c) != S.zero) { met = true; break; }
    if (!met) return {false, e};
  }
  return {true, -1};
}

// cover of a single idempotent e: D is the set of nonzero idempotents below e
inline CoverResult is_cover_of_idempotent(const InverseSemigroup& S,
                                          const std::vector<int>& C, int e) {
  if (!S.is_idempotent(e))
    throw Error(ErrKind::PreconditionE, S.elements[e] + " is not idempotent", e);
  return is_cover(S, C, S.idempotents_below(e));
}

}  // namespace tgt
