#pragma once

// Right-LCM monoid backends at desk scale: free words, (N^k, +), and their
// direct product. On top of them sits the [p,q] pair semigroup with the
// lcm-driven multiplication, core and locally-trivial membership (exact for
// the built-ins, bounded search otherwise), foundation sets, eventually
// periodic boundary points, and the two lemma harnesses.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tgt/inverse_semigroup.hpp"

namespace tgt::lcm {

enum class Kind { Free, Lattice, Product };

struct Elem {
  std::string word;             // over 'a', 'b', ...
  std::vector<long long> vec;   // componentwise additive part
  bool operator==(const Elem&) const = default;
};

class Monoid {
 public:
  static Monoid free_monoid(int alphabet) {
    if (alphabet < 1 || alphabet > 26)
      throw Error(ErrKind::BadInput, "alphabet size out of range", alphabet);
    return Monoid(Kind::Free, alphabet, 0);
  }
  static Monoid lattice_nk(int k) {
    if (k < 1) throw Error(ErrKind::BadInput, "lattice dimension out of range", k);
    return Monoid(Kind::Lattice, 0, k);
  }
  static Monoid product(int alphabet, int k) {
    if (alphabet < 1 || alphabet > 26 || k < 1)
      throw Error(ErrKind::BadInput, "bad product parameters", alphabet, k);
    return Monoid(Kind::Product, alphabet, k);
  }

  Kind kind() const { return kind_; }
  int alphabet() const { return alphabet_; }
  int dim() const { return k_; }

  Elem one() const { return Elem{"", std::vector<long long>(k_, 0)}; }

  void check(const Elem& x) const {
    if (static_cast<int>(x.vec.size()) != k_)
      throw Error(ErrKind::BadInput, "vector part has wrong dimension",
                  static_cast<long>(x.vec.size()), k_);
    for (char ch : x.word)
      if (ch < 'a' || ch >= 'a' + alphabet_)
        throw Error(ErrKind::BadInput, "letter outside the alphabet", ch);
    for (long long n : x.vec)
      if (n < 0) throw Error(ErrKind::BadInput, "negative coordinate", n);
  }

  Elem mul(const Elem& x, const Elem& y) const {
    Elem out{x.word + y.word, x.vec};
    for (int i = 0; i < k_; ++i) out.vec[i] += y.vec[i];
    return out;
  }

  bool eq(const Elem& x, const Elem& y) const { return x == y; }

  // pP meets qP iff the word parts are prefix-comparable; then the meet of
  // the ideals is principal at (longer word, componentwise max)
  std::optional<Elem> right_lcm(const Elem& x, const Elem& y) const {
    const std::string &a = x.word, &b = y.word;
    const std::string& longer = a.size() >= b.size() ? a : b;
    const std::string& shorter = a.size() >= b.size() ? b : a;
    if (longer.compare(0, shorter.size(), shorter) != 0) return std::nullopt;
    Elem out{longer, x.vec};
    for (int i = 0; i < k_; ++i) out.vec[i] = std::max(x.vec[i], y.vec[i]);
    return out;
  }

  // is y in xP?
  bool divides(const Elem& x, const Elem& y) const {
    if (y.word.size() < x.word.size() ||
        y.word.compare(0, x.word.size(), x.word) != 0)
      return false;
    for (int i = 0; i < k_; ++i)
      if (y.vec[i] < x.vec[i]) return false;
    return true;
  }

  // the m with x m = y; requires divides(x, y)
  Elem quotient(const Elem& x, const Elem& y) const {
    if (!divides(x, y))
      throw Error(ErrKind::BadInput, "quotient of non-multiple");
    Elem out{y.word.substr(x.word.size()), y.vec};
    for (int i = 0; i < k_; ++i) out.vec[i] -= x.vec[i];
    return out;
  }

  std::vector<Elem> units() const { return {one()}; }

  // p P meets q P for every q
  bool is_core(const Elem& x) const {
    return x.word.empty() || alphabet_ <= 1;
  }

 private:
  Monoid(Kind kind, int alphabet, int k) : kind_(kind), alphabet_(alphabet), k_(k) {}
  Kind kind_;
  int alphabet_;
  int k_;
};

inline std::string show(const Monoid& M, const Elem& e) {
  std::string w = e.word.empty() ? "1" : e.word;
  if (M.dim() == 0) return w;
  std::string v = "(";
  for (size_t i = 0; i < e.vec.size(); ++i) {
    if (i) v += ",";
    v += std::to_string(e.vec[i]);
  }
  v += ")";
  return M.alphabet() == 0 ? v : w + v;
}

// accepts the output of show: a word ("1" for the empty one), a vector
// "(n,...,n)", or word directly followed by vector
inline Elem parse_element(const Monoid& M, const std::string& s) {
  Elem out;
  size_t i = 0;
  std::string w;
  while (i < s.size() && s[i] != '(') w += s[i++];
  if (w != "1" && w != "") out.word = w;
  if (w == "1" && M.alphabet() == 0)
    throw Error(ErrKind::BadInput, "word part in a pure lattice element");
  if (i < s.size()) {
    if (s[i] != '(' || s.back() != ')')
      throw Error(ErrKind::BadInput, "malformed vector part: " + s);
    std::string body = s.substr(i + 1, s.size() - i - 2);
    std::string cur;
    for (char ch : body + ",") {
      if (ch == ',') {
        if (cur.empty()) throw Error(ErrKind::BadInput, "empty coordinate in " + s);
        out.vec.push_back(std::stoll(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
  } else {
    out.vec.assign(M.dim(), 0);
  }
  if (M.dim() > 0 && out.vec.empty()) out.vec.assign(M.dim(), 0);
  M.check(out);
  return out;
}

// [p,q]: the partial map q m -> p m, plus a formal zero
struct Pair {
  bool zero = true;
  Elem p, q;
};

inline Pair pair_zero() { return {}; }

inline Pair pair_make(const Monoid& M, Elem p, Elem q) {
  M.check(p);
  M.check(q);
  return {false, std::move(p), std::move(q)};
}

inline Pair pair_star(Pair x) {
  std::swap(x.p, x.q);
  return x;
}

// pairs agree up to simultaneous right multiplication by a unit
inline bool pair_eq(const Monoid& M, const Pair& x, const Pair& y) {
  if (x.zero || y.zero) return x.zero == y.zero;
  for (const Elem& u : M.units())
    if (M.eq(M.mul(x.p, u), y.p) && M.eq(M.mul(x.q, u), y.q)) return true;
  return false;
}

// [p,q][r,t] = [p q', t r'] where q q' = r r' is the right lcm of q and r
inline Pair pair_mul(const Monoid& M, const Pair& x, const Pair& y) {
  if (x.zero || y.zero) return pair_zero();
  auto l = M.right_lcm(x.q, y.p);
  if (!l) return pair_zero();
  return {false, M.mul(x.p, M.quotient(x.q, *l)),
          M.mul(y.q, M.quotient(y.p, *l))};
}

inline std::string show_pair(const Monoid& M, const Pair& x) {
  if (x.zero) return "0";
  return "[" + show(M, x.p) + "," + show(M, x.q) + "]";
}

// ascending enumeration of elements with |word| + |vector| at most d
inline std::vector<Elem> elements_up_to(const Monoid& M, int d) {
  std::vector<std::string> words = {""};
  if (M.alphabet() > 0) {
    size_t start = 0;
    for (int len = 1; len <= d; ++len) {
      size_t stop = words.size();
      for (size_t i = start; i < stop; ++i)
        for (char c = 'a'; c < 'a' + M.alphabet(); ++c)
          words.push_back(words[i] + c);
      start = stop;
    }
  }
  std::vector<Elem> out;
  for (const auto& w : words) {
    int budget = d - static_cast<int>(w.size());
    std::vector<std::vector<long long>> vecs = {std::vector<long long>(M.dim(), 0)};
    for (int i = 0; i < M.dim(); ++i) {
      std::vector<std::vector<long long>> next;
      for (const auto& v : vecs) {
        long long used = 0;
        for (long long t : v) used += t;
        for (long long n = 0; n + used <= budget; ++n) {
          auto v2 = v;
          v2[i] = n;
          next.push_back(std::move(v2));
        }
      }
      vecs = std::move(next);
    }
    for (auto& v : vecs) out.push_back(Elem{w, std::move(v)});
  }
  return out;
}

enum class Verdict { False, True, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

// exact built-in decision of p a P meet q a P != empty for all a
inline bool in_s_iso(const Monoid& M, const Pair& x) {
  if (x.zero) return true;
  return x.p.word == x.q.word || M.alphabet() <= 1;
}

struct BoundedResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Elem> witness;  // the a with p a P meet q a P empty
  int depth = 0;
};

// universal search to the given depth; never guesses beyond the bound
inline BoundedResult in_s_iso_bounded(const Monoid& M, const Pair& x, int depth) {
  BoundedResult out;
  out.depth = depth;
  if (x.zero) {
    out.verdict = Verdict::True;
    return out;
  }
  for (const Elem& a : elements_up_to(M, depth))
    if (!M.right_lcm(M.mul(x.p, a), M.mul(x.q, a))) {
      out.verdict = Verdict::False;
      out.witness = a;
      return out;
    }
  return out;
}

// both coordinates in the core submonoid (and not the zero)
inline bool is_core_pair(const Monoid& M, const Pair& x) {
  return !x.zero && M.is_core(x.p) && M.is_core(x.q);
}

struct FoundationResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Elem> witness;  // a q whose ideal misses every member
};

// exact for the built-ins: only the word parts matter, and completeness of
// the prefix tree at the longest member length decides it
inline FoundationResult is_foundation_set(const Monoid& M,
                                          const std::vector<Elem>& f,
                                          int probe_depth = 0) {
  (void)probe_depth;  // built-ins decide exactly
  FoundationResult out;
  if (f.empty()) {
    out.verdict = Verdict::False;
    out.witness = M.one();
    return out;
  }
  for (const Elem& e : f) M.check(e);
  size_t maxlen = 0;
  for (const Elem& e : f) maxlen = std::max(maxlen, e.word.size());
  if (M.alphabet() == 0 || maxlen == 0) {
    out.verdict = Verdict::True;
    return out;
  }
  std::vector<std::string> level = {""};
  for (size_t len = 0; len < maxlen; ++len) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (char c = 'a'; c < 'a' + M.alphabet(); ++c) next.push_back(w + c);
    level = std::move(next);
  }
  for (const auto& w : level) {
    bool hit = false;
    for (const Elem& e : f)
      if (w.compare(0, e.word.size(), e.word) == 0) {
        hit = true;
        break;
      }
    if (!hit) {
      out.verdict = Verdict::False;
      out.witness = Elem{w, std::vector<long long>(M.dim(), 0)};
      return out;
    }
  }
  out.verdict = Verdict::True;
  return out;
}

// an eventually periodic limit of principal ideals: the infinite word
// pre per per ... together with the vector part pushed to infinity.
// Pure lattice points carry no word data.
struct BoundaryPoint {
  std::string pre, per;
};

inline std::vector<BoundaryPoint> boundary_points(const Monoid& M, int depth) {
  if (M.alphabet() == 0) return {BoundaryPoint{}};
  std::vector<std::string> words = {""};
  size_t start = 0;
  for (int len = 1; len <= depth; ++len) {
    size_t stop = words.size();
    for (size_t i = start; i < stop; ++i)
      for (char c = 'a'; c < 'a' + M.alphabet(); ++c)
        words.push_back(words[i] + c);
    start = stop;
  }
  std::vector<BoundaryPoint> out;
  for (const auto& pre : words)
    for (const auto& per : words)
      if (!per.empty()) out.push_back(BoundaryPoint{pre, per});
  return out;
}

// does the boundary point lie in the principal ideal cylinder of e?
inline bool point_contains(const Monoid& M, const BoundaryPoint& x, const Elem& e) {
  if (M.alphabet() == 0) return true;  // the vector part always saturates
  for (size_t i = 0; i < e.word.size(); ++i) {
    char c = i < x.pre.size() ? x.pre[i]
                              : x.per[(i - x.pre.size()) % x.per.size()];
    if (e.word[i] != c) return false;
  }
  return true;
}

struct Lcm2Report {
  bool ok = true;
  std::string detail;
};

// for a locally trivial [p,q] with right lcm r: every sampled boundary
// point treats pP, qP, rP as one set, and every sampled b compatible with
// q is compatible with r
inline Lcm2Report lemma_lcm2_check(const Monoid& M, const Pair& x, int depth) {
  if (x.zero || !in_s_iso(M, x))
    throw Error(ErrKind::PreconditionSiso, "pair is not locally trivial");
  auto r = M.right_lcm(x.p, x.q);
  if (!r)
    throw Error(ErrKind::PreconditionSiso, "coordinates have disjoint ideals");
  Lcm2Report out;
  for (const auto& pt : boundary_points(M, depth)) {
    bool cp = point_contains(M, pt, x.p);
    bool cq = point_contains(M, pt, x.q);
    bool cr = point_contains(M, pt, *r);
    if (cp != cq || cq != cr) {
      out.ok = false;
      out.detail = "boundary point " + pt.pre + "(" + pt.per + ")^inf splits the sets";
      return out;
    }
  }
  for (const Elem& b : elements_up_to(M, depth))
    if (M.right_lcm(b, x.q) && !M.right_lcm(b, *r)) {
      out.ok = false;
      out.detail = "b = " + show(M, b) + " meets qP but not rP";
      return out;
    }
  return out;
}

struct Lcm1Report {
  Pair result;
  bool ok = false;
};

// [1,b][p,q][b,1] lands in the core pairs whenever [p,q] is locally
// trivial with right lcm r and b sits in rP
inline Lcm1Report lemma_lcm1_check(const Monoid& M, const Pair& x, const Elem& b) {
  if (x.zero || !in_s_iso(M, x))
    throw Error(ErrKind::PreconditionSiso, "pair is not locally trivial");
  auto r = M.right_lcm(x.p, x.q);
  if (!r)
    throw Error(ErrKind::PreconditionSiso, "coordinates have disjoint ideals");
  M.check(b);
  if (!M.divides(*r, b))
    throw Error(ErrKind::PreconditionB, "b lies outside the lcm ideal");
  Pair left = pair_make(M, M.one(), b);
  Pair right = pair_make(M, b, M.one());
  Lcm1Report out;
  out.result = pair_mul(M, pair_mul(M, left, x), right);
  out.ok = is_core_pair(M, out.result);
  return out;
}

}  // namespace tgt::lcm
