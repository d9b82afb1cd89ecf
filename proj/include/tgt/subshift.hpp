#pragma once

// One-sided shifts of finite type. Cylinder sets are kept in a canonical
// normal form (minimal common depth), so set equality is structural. The
// prefix-exchange maps x = by -> ay carry their domain along and are compared
// as partial functions, never as syntactic data; equality of the periodic
// tails is decided by a forced-walk reachability check on the block graph.
// For shifts with finitely many points the translation matrices are built
// explicitly and fed back into the matrix-representation checks.

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tgt/builders.hpp"
#include "tgt/groupoid_algebra.hpp"
#include "tgt/inverse_semigroup.hpp"
#include "tgt/spectrum.hpp"

namespace tgt::shift {

enum class Verdict { False, True, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    default: return "unknown";
  }
}

// ---------------------------------------------------------------------------
// the shift space itself: block graph with dead states pruned

class Sft {
 public:
  // alphabet given as a string of distinct symbols
  static Sft make(std::string alphabet, std::vector<std::string> forbidden) {
    Sft s;
    if (alphabet.empty()) throw Error(ErrKind::BadInput, "empty alphabet");
    for (char a : alphabet) {
      if (std::count(alphabet.begin(), alphabet.end(), a) != 1)
        throw Error(ErrKind::BadInput, "repeated alphabet symbol");
      if (std::string(".!|*@,").find(a) != std::string::npos)
        throw Error(ErrKind::BadInput, "alphabet symbol reserved for syntax");
    }
    s.alpha_ = std::move(alphabet);
    for (const auto& f : forbidden) {
      if (f.empty()) throw Error(ErrKind::BadInput, "empty forbidden word");
      for (char a : f)
        if (s.alpha_.find(a) == std::string::npos)
          throw Error(ErrKind::BadInput, "forbidden word off the alphabet");
      s.m_ = std::max(s.m_, static_cast<int>(f.size()));
    }
    s.forb_ = std::move(forbidden);
    s.build();
    return s;
  }

  int asize() const { return static_cast<int>(alpha_.size()); }
  const std::string& alphabet() const { return alpha_; }
  const std::vector<std::string>& forbidden() const { return forb_; }
  int m() const { return m_; }
  int k() const { return m_ - 1; }  // block length
  const std::vector<std::string>& vertices() const { return verts_; }

  bool word_allowed(const std::string& w) const {
    for (const auto& f : forb_)
      if (w.find(f) != std::string::npos) return false;
    return true;
  }

  // does w extend to a point of the space?
  bool live(const std::string& w) const {
    if (!word_allowed(w)) return false;
    int k = this->k();
    if (static_cast<int>(w.size()) <= k) return live_.count(w) > 0;
    return live_.count(w.substr(w.size() - k)) > 0;
  }

  // suffix state of a live word
  std::string state_of(const std::string& w) const {
    int k = this->k();
    if (static_cast<int>(w.size()) <= k) return w;
    return w.substr(w.size() - k);
  }

  // advance one letter; nullopt when the extension leaves the language
  std::optional<std::string> step(const std::string& st, char a) const {
    std::string t = st + a;
    for (const auto& f : forb_)
      if (t.size() >= f.size() &&
          t.compare(t.size() - f.size(), f.size(), f) == 0)
        return std::nullopt;
    int k = this->k();
    if (static_cast<int>(t.size()) > k) t = t.substr(t.size() - k);
    if (!live_.count(t)) return std::nullopt;
    return t;
  }

  std::vector<char> moves(const std::string& st) const {
    std::vector<char> out;
    for (char a : alpha_)
      if (step(st, a)) out.push_back(a);
    return out;
  }

 private:
  void build() {
    int k = this->k();
    // candidate blocks of length k, kept while some extension survives
    std::set<std::string> blocks;
    std::vector<std::string> level = {""};
    for (int i = 0; i < k; ++i) {
      std::vector<std::string> next;
      for (const auto& w : level)
        for (char a : alpha_)
          if (word_allowed(w + a)) next.push_back(w + a);
      level = std::move(next);
    }
    for (auto& w : level)
      if (word_allowed(w)) blocks.insert(w);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = blocks.begin(); it != blocks.end();) {
        bool alive = false;
        for (char a : alpha_) {
          std::string t = *it + a;
          bool bad = false;
          for (const auto& f : forb_)
            if (t.size() >= f.size() &&
                t.compare(t.size() - f.size(), f.size(), f) == 0) {
              bad = true;
              break;
            }
          if (bad) continue;
          std::string tgt_blk = t.size() > static_cast<size_t>(k)
                                    ? t.substr(t.size() - k)
                                    : t;
          if (blocks.count(tgt_blk)) {
            alive = true;
            break;
          }
        }
        if (!alive) {
          it = blocks.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    verts_.assign(blocks.begin(), blocks.end());
    live_ = std::move(blocks);
    // shorter live prefixes, by backwards induction on the length
    for (int len = k - 1; len >= 0; --len) {
      std::vector<std::string> lv = {""};
      for (int i = 0; i < len; ++i) {
        std::vector<std::string> next;
        for (const auto& w : lv)
          for (char a : alpha_)
            if (word_allowed(w + a)) next.push_back(w + a);
        lv = std::move(next);
      }
      for (const auto& w : lv) {
        if (!word_allowed(w)) continue;
        for (char a : alpha_)
          if (live_.count(w + a)) {
            live_.insert(w);
            break;
          }
      }
    }
  }

  std::string alpha_;
  std::vector<std::string> forb_;
  int m_ = 1;
  std::set<std::string> live_;  // live words of length <= k
  std::vector<std::string> verts_;
};

// ---------------------------------------------------------------------------
// eventually periodic points

struct Pt {
  std::string pre, per;  // per nonempty, pair canonical
  bool operator==(const Pt& o) const { return pre == o.pre && per == o.per; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
  bool operator<(const Pt& o) const {
    return pre != o.pre ? pre < o.pre : per < o.per;
  }
};

inline Pt make_pt(std::string pre, std::string per) {
  if (per.empty()) throw Error(ErrKind::BadInput, "empty period");
  // primitive root of the period
  for (size_t d = 1; d <= per.size(); ++d) {
    if (per.size() % d) continue;
    bool rep = true;
    for (size_t i = d; i < per.size() && rep; ++i)
      if (per[i] != per[i - d]) rep = false;
    if (rep) {
      per.resize(d);
      break;
    }
  }
  // absorb a preperiod tail that already matches the period
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per = per.back() + per.substr(0, per.size() - 1);
  }
  return Pt{std::move(pre), std::move(per)};
}

inline char letter_at(const Pt& x, long i) {
  if (i < static_cast<long>(x.pre.size())) return x.pre[i];
  return x.per[(i - x.pre.size()) % x.per.size()];
}

inline std::string prefix_of(const Pt& x, int len) {
  std::string w;
  for (int i = 0; i < len; ++i) w += letter_at(x, i);
  return w;
}

inline bool point_in_space(const Sft& S, const Pt& x) {
  int reps = S.m() / static_cast<int>(x.per.size()) + 2;
  std::string w = x.pre;
  for (int i = 0; i < reps; ++i) w += x.per;
  return S.word_allowed(w);
}

// drop d leading letters
inline Pt shift_left(const Pt& x, int d) {
  if (d <= static_cast<int>(x.pre.size()))
    return make_pt(x.pre.substr(d), x.per);
  int r = (d - static_cast<int>(x.pre.size())) % static_cast<int>(x.per.size());
  return make_pt("", x.per.substr(r) + x.per.substr(0, r));
}

inline Pt prepend(const std::string& a, const Pt& x) {
  return make_pt(a + x.pre, x.per);
}

// ---------------------------------------------------------------------------
// clopen sets in canonical form

struct ClopenSet {
  int depth = 0;
  std::vector<std::string> words;  // sorted live words of length == depth
  bool operator==(const ClopenSet&) const = default;
  bool empty() const { return words.empty(); }
};

inline std::vector<std::string> live_words(const Sft& S, int len) {
  std::vector<std::string> cur;
  if (S.live("")) cur.push_back("");
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : cur)
      for (char a : S.moves(S.state_of(w))) next.push_back(w + a);
    cur = std::move(next);
  }
  return cur;
}

inline std::vector<std::string> extend_word(const Sft& S, const std::string& w,
                                            int to_len) {
  std::vector<std::string> cur = {w};
  for (int i = static_cast<int>(w.size()); i < to_len; ++i) {
    std::vector<std::string> next;
    for (const auto& u : cur)
      for (char a : S.moves(S.state_of(u))) next.push_back(u + a);
    cur = std::move(next);
  }
  return cur;
}

inline ClopenSet normalize(const Sft& S, int depth,
                           std::vector<std::string> ws) {
  std::vector<std::string> kept;
  for (auto& w : ws) {
    if (static_cast<int>(w.size()) != depth)
      throw Error(ErrKind::BadInput, "word depth mismatch");
    if (S.live(w)) kept.push_back(std::move(w));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  // merge whole sibling groups while every group is all-or-none
  while (depth > 0 && !kept.empty()) {
    std::map<std::string, int> group;
    for (const auto& w : kept) group[w.substr(0, depth - 1)]++;
    bool reducible = true;
    for (const auto& [u, cnt] : group)
      if (cnt != static_cast<int>(S.moves(S.state_of(u)).size())) {
        reducible = false;
        break;
      }
    if (!reducible) break;
    std::vector<std::string> up;
    up.reserve(group.size());
    for (const auto& [u, cnt] : group) up.push_back(u);
    kept = std::move(up);
    --depth;
  }
  if (kept.empty()) depth = 0;
  return ClopenSet{depth, std::move(kept)};
}

inline ClopenSet clopen_empty() { return ClopenSet{0, {}}; }

inline ClopenSet whole_space(const Sft& S) {
  return S.live("") ? ClopenSet{0, {""}} : clopen_empty();
}

inline ClopenSet expand(const Sft& S, const ClopenSet& c, int depth) {
  if (depth < c.depth) throw Error(ErrKind::BadInput, "expand shrinks depth");
  if (depth == c.depth) return c;
  std::vector<std::string> out;
  for (const auto& w : c.words)
    for (auto& u : extend_word(S, w, depth)) out.push_back(std::move(u));
  std::sort(out.begin(), out.end());
  return ClopenSet{depth, std::move(out)};
}

inline ClopenSet clopen_union(const Sft& S, const ClopenSet& a,
                              const ClopenSet& b) {
  int d = std::max(a.depth, b.depth);
  auto ea = expand(S, a, d).words, eb = expand(S, b, d).words;
  std::vector<std::string> out;
  std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(),
                 std::back_inserter(out));
  return normalize(S, d, std::move(out));
}

inline ClopenSet clopen_intersect(const Sft& S, const ClopenSet& a,
                                  const ClopenSet& b) {
  int d = std::max(a.depth, b.depth);
  auto ea = expand(S, a, d).words, eb = expand(S, b, d).words;
  std::vector<std::string> out;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::back_inserter(out));
  return normalize(S, d, std::move(out));
}

inline ClopenSet clopen_minus(const Sft& S, const ClopenSet& a,
                              const ClopenSet& b) {
  int d = std::max(a.depth, b.depth);
  auto ea = expand(S, a, d).words, eb = expand(S, b, d).words;
  std::vector<std::string> out;
  std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(),
                      std::back_inserter(out));
  return normalize(S, d, std::move(out));
}

inline bool clopen_subset(const Sft& S, const ClopenSet& a,
                          const ClopenSet& b) {
  return clopen_intersect(S, a, b) == a;
}

inline bool clopen_meets(const Sft& S, const ClopenSet& a, const ClopenSet& b) {
  return !clopen_intersect(S, a, b).empty();
}

inline bool contains_point(const Sft& S, const ClopenSet& c, const Pt& x) {
  (void)S;
  return std::binary_search(c.words.begin(), c.words.end(),
                            prefix_of(x, c.depth));
}

// {x : x starts with alpha}
inline ClopenSet cylinder(const Sft& S, const std::string& alpha) {
  if (!S.live(alpha)) return clopen_empty();
  return normalize(S, static_cast<int>(alpha.size()), {alpha});
}

// {alpha x in the space : f x in the space}
inline ClopenSet c_set(const Sft& S, const std::string& f,
                       const std::string& alpha) {
  if (!S.live(alpha)) return clopen_empty();
  int depth = static_cast<int>(alpha.size()) + S.k();
  std::vector<std::string> out;
  for (const auto& w : extend_word(S, alpha, depth))
    if (S.word_allowed(f + w.substr(alpha.size()))) out.push_back(w);
  return normalize(S, depth, std::move(out));
}

inline ClopenSet c_fset(const Sft& S, const std::vector<std::string>& F,
                        const std::string& alpha) {
  if (!S.live(alpha)) return clopen_empty();
  int depth = static_cast<int>(alpha.size()) + S.k();
  std::vector<std::string> out;
  for (const auto& w : extend_word(S, alpha, depth)) {
    std::string tail = w.substr(alpha.size());
    bool ok = true;
    for (const auto& f : F)
      if (!S.word_allowed(f + tail)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return normalize(S, depth, std::move(out));
}

// the ultrafilter attached to an eventually periodic point: membership of
// the idempotent with data (F, v) is just point membership of its domain
struct PointUltrafilter {
  Pt x;
  bool contains(const Sft& S, const std::vector<std::string>& F,
                const std::string& v) const {
    return contains_point(S, c_fset(S, F, v), x);
  }
};

// ---------------------------------------------------------------------------
// prefix-exchange elements: x = beta y -> alpha y on a clopen domain

struct SxElement {
  bool zero = true;
  std::string alpha, beta;
  ClopenSet dom;  // subset of the beta cylinder; nonempty iff not zero
};

inline SxElement sx_zero() { return SxElement{}; }

inline void check_word(const Sft& S, const std::string& w) {
  for (char a : w)
    if (S.alphabet().find(a) == std::string::npos)
      throw Error(ErrKind::BadInput, "word off the alphabet");
}

// canonical constructor: trims the domain to the points whose image stays in
// the space, then strips the common suffix of the two prefixes
inline SxElement sx_make(const Sft& S, std::string alpha, std::string beta,
                         const ClopenSet& dom) {
  check_word(S, alpha);
  check_word(S, beta);
  int depth = std::max({dom.depth, static_cast<int>(beta.size()) + S.k()});
  std::vector<std::string> kept;
  for (const auto& w : expand(S, dom, depth).words) {
    if (w.compare(0, beta.size(), beta) != 0) continue;
    if (S.word_allowed(alpha + w.substr(beta.size()))) kept.push_back(w);
  }
  ClopenSet d = normalize(S, depth, std::move(kept));
  if (d.empty()) return sx_zero();
  while (!alpha.empty() && !beta.empty() && alpha.back() == beta.back()) {
    alpha.pop_back();
    beta.pop_back();
  }
  return SxElement{false, std::move(alpha), std::move(beta), std::move(d)};
}

inline ClopenSet sx_image(const Sft& S, const SxElement& e) {
  if (e.zero) return clopen_empty();
  int depth = std::max(e.dom.depth, static_cast<int>(e.beta.size()) + S.k());
  std::vector<std::string> out;
  for (const auto& w : expand(S, e.dom, depth).words)
    out.push_back(e.alpha + w.substr(e.beta.size()));
  return normalize(S, depth - static_cast<int>(e.beta.size()) +
                          static_cast<int>(e.alpha.size()),
                   std::move(out));
}

inline SxElement sx_star(const Sft& S, const SxElement& e) {
  if (e.zero) return sx_zero();
  return sx_make(S, e.beta, e.alpha, sx_image(S, e));
}

// composite e1 after e2
inline SxElement sx_mul(const Sft& S, const SxElement& e1,
                        const SxElement& e2) {
  if (e1.zero || e2.zero) return sx_zero();
  const std::string &a2 = e2.alpha, &b1 = e1.beta;
  std::string alpha, beta;
  if (a2.size() >= b1.size()) {
    if (a2.compare(0, b1.size(), b1) != 0) return sx_zero();
    alpha = e1.alpha + a2.substr(b1.size());
    beta = e2.beta;
  } else {
    if (b1.compare(0, a2.size(), a2) != 0) return sx_zero();
    alpha = e1.alpha;
    beta = e2.beta + b1.substr(a2.size());
  }
  int bb = static_cast<int>(e2.beta.size());
  int aa = static_cast<int>(e2.alpha.size());
  int depth = std::max({e2.dom.depth, bb + S.k(), e1.dom.depth + bb - aa});
  std::vector<std::string> kept;
  for (const auto& w : expand(S, e2.dom, depth).words) {
    std::string img = e2.alpha + w.substr(bb);  // image prefix of this block
    if (std::binary_search(e1.dom.words.begin(), e1.dom.words.end(),
                           img.substr(0, e1.dom.depth)))
      kept.push_back(w);
  }
  return sx_make(S, std::move(alpha), std::move(beta),
                 normalize(S, depth, std::move(kept)));
}

// exact functional equality
inline bool sx_eq(const Sft& S, const SxElement& e1, const SxElement& e2) {
  if (e1.zero || e2.zero) return e1.zero == e2.zero;
  if (!(e1.dom == e2.dom)) return false;
  int a1 = static_cast<int>(e1.alpha.size()), b1 = static_cast<int>(e1.beta.size());
  int a2 = static_cast<int>(e2.alpha.size()), b2 = static_cast<int>(e2.beta.size());
  int s1 = b1 - a1, s2 = b2 - a2;
  int p0 = std::max(a1, a2);
  int d = std::abs(s1 - s2);
  int j0 = p0 + std::min(s1, s2);
  int depth = std::max(e1.dom.depth, p0 + std::max({s1, s2, 0}) + 1);
  std::set<std::pair<std::string, std::string>> visited;
  for (const auto& w : expand(S, e1.dom, depth).words) {
    // finitely many output positions mix fixed letters with input letters
    for (int i = 0; i < p0; ++i) {
      char c1 = i < a1 ? e1.alpha[i] : w[i + s1];
      char c2 = i < a2 ? e2.alpha[i] : w[i + s2];
      if (c1 != c2) return false;
    }
    if (d == 0) continue;
    // beyond p0 both outputs read the input, offset by d: the tail must
    // repeat with period d, first inside the block...
    for (int j = j0 + d; j < depth; ++j)
      if (w[j] != w[j - d]) return false;
    // ...then forever: every reachable move must copy the letter d back
    std::vector<std::pair<std::string, std::string>> stack;
    stack.push_back({S.state_of(w), w.substr(w.size() - d)});
    while (!stack.empty()) {
      auto [st, buf] = stack.back();
      stack.pop_back();
      if (!visited.insert({st, buf}).second) continue;
      for (char a : S.moves(st)) {
        if (a != buf[0]) return false;
        stack.push_back({*S.step(st, a), buf.substr(1) + a});
      }
    }
  }
  return true;
}

inline bool sx_is_idempotent(const Sft& S, const SxElement& e) {
  return sx_eq(S, sx_mul(S, e, e), e);
}

// generator words and their idempotents
inline SxElement sx_word(const Sft& S, const std::string& alpha) {
  check_word(S, alpha);
  return sx_make(S, alpha, "", whole_space(S));
}

inline SxElement sx_idem(const Sft& S, const std::vector<std::string>& F,
                         const std::string& gamma) {
  for (const auto& f : F) check_word(S, f);
  return sx_make(S, gamma, gamma, c_fset(S, F, gamma));
}

// ---------------------------------------------------------------------------
// points under the maps

inline Pt theta_on_point(const Sft& S, const SxElement& e, const Pt& x) {
  if (e.zero || !contains_point(S, e.dom, x))
    throw Error(ErrKind::DomainViolation, "point outside the domain");
  if (prefix_of(x, static_cast<int>(e.beta.size())) != e.beta)
    throw Error(ErrKind::DomainViolation, "point misses the input prefix");
  return prepend(e.alpha, shift_left(x, static_cast<int>(e.beta.size())));
}

struct FixedPointResult {
  bool clopen_form = false;  // true when the prefixes have equal length
  ClopenSet set;             // agreement set in that case
  std::vector<Pt> points;    // at most one point otherwise
};

inline FixedPointResult fixed_points(const Sft& S, const SxElement& e) {
  FixedPointResult out;
  if (e.zero) {
    out.clopen_form = true;
    out.set = clopen_empty();
    return out;
  }
  if (e.alpha.size() == e.beta.size()) {
    out.clopen_form = true;
    out.set = clopen_intersect(S, e.dom, cylinder(S, e.alpha));
    return out;
  }
  const std::string& longer = e.alpha.size() > e.beta.size() ? e.alpha : e.beta;
  const std::string& shorter = e.alpha.size() > e.beta.size() ? e.beta : e.alpha;
  if (longer.compare(0, shorter.size(), shorter) != 0) return out;
  Pt cand = make_pt(longer, longer.substr(shorter.size()));
  if (point_in_space(S, cand) && contains_point(S, e.dom, cand))
    out.points.push_back(cand);
  return out;
}

// deterministic eventually periodic samples from a clopen set
inline std::vector<Pt> sample_points(const Sft& S, const ClopenSet& c,
                                     int variants = 4) {
  std::set<Pt> out;
  for (const auto& w : c.words) {
    for (int v = 0; v < variants; ++v) {
      std::string st = S.state_of(w), labels;
      std::map<std::string, int> seen;
      int t = 0;
      while (true) {
        auto it = seen.find(st);
        if (it != seen.end()) {
          out.insert(make_pt(w + labels.substr(0, it->second),
                             labels.substr(it->second, t - it->second)));
          break;
        }
        seen[st] = t;
        auto mv = S.moves(st);
        char a = mv[v % static_cast<int>(mv.size())];
        labels += a;
        st = *S.step(st, a);
        ++t;
      }
    }
  }
  return {out.begin(), out.end()};
}

// every element with short prefixes is either idempotent or visibly moves a
// point of its domain
struct SisoReport {
  int elements = 0, idempotents = 0, moved = 0;
  bool ok = true;
};

inline std::vector<SxElement> enumerate_elements(const Sft& S, int depth) {
  std::vector<std::string> ws;
  for (int l = 0; l <= depth; ++l)
    for (auto& w : live_words(S, l)) ws.push_back(std::move(w));
  std::vector<SxElement> out;
  for (const auto& a : ws)
    for (const auto& b : ws) {
      SxElement e = sx_make(S, a, b, cylinder(S, b));
      if (!e.zero) out.push_back(std::move(e));
    }
  return out;
}

inline SisoReport siso_sample_check(const Sft& S, int depth) {
  SisoReport rep;
  for (const auto& e : enumerate_elements(S, depth)) {
    ++rep.elements;
    if (sx_is_idempotent(S, e)) {
      ++rep.idempotents;
      continue;
    }
    bool found = false;
    for (const auto& x : sample_points(S, e.dom))
      if (theta_on_point(S, e, x) != x) {
        found = true;
        break;
      }
    if (found)
      ++rep.moved;
    else
      rep.ok = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// covers of an idempotent's domain

struct CoverReport {
  Verdict cover = Verdict::Unknown;
  bool union_matches = false;
  std::optional<std::string> witness;  // cylinder missed by the family
};

inline CoverReport cover_domain_union(const Sft& S, const SxElement& e,
                                      const std::vector<SxElement>& C,
                                      int depth) {
  if (e.zero || !sx_is_idempotent(S, e))
    throw Error(ErrKind::PreconditionE, "cover root must be an idempotent");
  for (const auto& c : C) {
    if (c.zero || !sx_is_idempotent(S, c))
      throw Error(ErrKind::PreconditionE, "cover member must be an idempotent");
    if (!clopen_subset(S, c.dom, e.dom))
      throw Error(ErrKind::CNotSubsetOfD, "cover member escapes the root");
  }
  CoverReport rep;
  ClopenSet uni = clopen_empty();
  for (const auto& c : C) uni = clopen_union(S, uni, c.dom);
  rep.union_matches = uni == e.dom;
  int L = std::max(depth, e.dom.depth);
  for (const auto& w : expand(S, e.dom, L).words) {
    bool meets = false;
    for (const auto& c : C)
      if (clopen_meets(S, cylinder(S, w), c.dom)) {
        meets = true;
        break;
      }
    if (!meets) {
      rep.cover = Verdict::False;
      rep.witness = w;
      return rep;
    }
  }
  rep.cover = L >= uni.depth ? Verdict::True : Verdict::Unknown;
  return rep;
}

// smallest cover of the idempotents fixed by e: {e} when e is idempotent,
// otherwise the point mass at the unique fixed point when that singleton is
// open, otherwise empty
inline std::vector<SxElement> condition_h_witness(const Sft& S,
                                                  const SxElement& e) {
  if (e.zero) return {};
  if (sx_is_idempotent(S, e)) return {e};
  if (e.alpha.size() == e.beta.size()) return {};
  auto fps = fixed_points(S, e);
  if (fps.points.empty()) return {};
  const Pt& x = fps.points[0];
  int base = static_cast<int>(x.pre.size()) + S.k();
  for (int len = base; len <= base + static_cast<int>(x.per.size()); ++len) {
    std::string w = prefix_of(x, len);
    // singleton cylinder iff every reachable state is forced
    std::set<std::string> vis;
    std::vector<std::string> stack = {S.state_of(w)};
    bool forced = true;
    while (!stack.empty() && forced) {
      std::string st = stack.back();
      stack.pop_back();
      if (!vis.insert(st).second) continue;
      auto mv = S.moves(st);
      if (mv.size() != 1) forced = false;
      for (char a : mv) stack.push_back(*S.step(st, a));
    }
    if (!forced) continue;
    SxElement f = sx_make(S, w, w, cylinder(S, w));
    if (!sx_eq(S, sx_mul(S, e, f), f))
      throw Error(ErrKind::CharacterizationMismatch,
                  "point mass not absorbed by its element");
    return {f};
  }
  return {};
}

// ---------------------------------------------------------------------------
// finite shifts: explicit translation matrices

inline bool x_is_finite(const Sft& S) {
  const auto& vs = S.vertices();
  int n = static_cast<int>(vs.size());
  std::map<std::string, int> id;
  for (int i = 0; i < n; ++i) id[vs[i]] = i;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (char a : S.moves(vs[i])) reach[i][id[*S.step(vs[i], a)]] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (int i = 0; i < n; ++i)
    if (reach[i][i] && S.moves(vs[i]).size() != 1) return false;
  return true;
}

inline std::vector<Pt> enumerate_points(const Sft& S) {
  if (!x_is_finite(S))
    throw Error(ErrKind::NotFinite, "the shift space is infinite");
  std::set<Pt> pts;
  for (const auto& v : S.vertices()) {
    // all walks from this block; branching is transient so this terminates
    struct Node {
      std::string st, labels;
      std::map<std::string, int> seen;
    };
    std::vector<Node> stack = {{v, "", {{v, 0}}}};
    while (!stack.empty()) {
      Node nd = std::move(stack.back());
      stack.pop_back();
      for (char a : S.moves(nd.st)) {
        std::string st2 = *S.step(nd.st, a);
        std::string lab2 = nd.labels + a;
        auto it = nd.seen.find(st2);
        if (it != nd.seen.end()) {
          int i = it->second;
          pts.insert(make_pt(v + lab2.substr(0, i),
                             lab2.substr(i, static_cast<int>(lab2.size()) - i)));
        } else {
          Node nxt{st2, lab2, nd.seen};
          nxt.seen[st2] = static_cast<int>(lab2.size());
          stack.push_back(std::move(nxt));
        }
      }
    }
  }
  return {pts.begin(), pts.end()};
}

struct ShiftOperatorsReport {
  std::vector<Pt> points;
  std::vector<Eigen::MatrixXcd> letter_mats;  // indexed like the alphabet
  bool sum_identity = false;
  InverseSemigroup sgp;
  std::vector<Eigen::MatrixXcd> rep;  // per semigroup element
  TightRepReport tight;
  long idem_rank_abstract = 0, idem_rank_concrete = 0;
  bool idem_injective = false;
};

inline ShiftOperatorsReport finite_shift_operators(const Sft& S) {
  ShiftOperatorsReport out;
  out.points = enumerate_points(S);
  int n = static_cast<int>(out.points.size());
  std::map<Pt, int> idx;
  for (int i = 0; i < n; ++i) idx[out.points[i]] = i;
  using PMap = builders::detail::PMap;
  std::vector<PMap> gens;
  for (char a : S.alphabet()) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    PMap f(n, -1);
    for (int j = 0; j < n; ++j) {
      Pt ax = prepend(std::string(1, a), out.points[j]);
      if (!point_in_space(S, ax)) continue;
      auto it = idx.find(ax);
      if (it == idx.end())
        throw Error(ErrKind::CharacterizationMismatch,
                    "translate escaped the enumerated points");
      m(it->second, j) = 1.0;
      f[j] = it->second;
    }
    out.letter_mats.push_back(std::move(m));
    gens.push_back(std::move(f));
  }
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& m : out.letter_mats) sum += m * m.adjoint();
  out.sum_identity = (sum - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12;

  // close the partial maps under star and composition, empty map adjoined
  std::set<PMap> closed(gens.begin(), gens.end());
  PMap ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  closed.insert(ident);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PMap> cur(closed.begin(), closed.end());
    for (const auto& f : cur) {
      if (closed.insert(builders::detail::pmap_inverse(f)).second) grew = true;
      for (const auto& g : cur)
        if (closed.insert(builders::detail::pmap_compose(f, g)).second)
          grew = true;
    }
  }
  closed.insert(PMap(n, -1));
  std::vector<PMap> maps(closed.begin(), closed.end());
  out.sgp = builders::detail::from_pmaps(maps, "shift");
  if (out.sgp.size() != static_cast<int>(maps.size()))
    throw Error(ErrKind::CharacterizationMismatch, "closure size mismatch");
  for (int i = 0; i < out.sgp.size(); ++i) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x)
      if (maps[i][x] >= 0) m(maps[i][x], x) = 1.0;
    out.rep.push_back(std::move(m));
  }
  out.tight = check_tight_representation(out.sgp, out.rep);

  auto sp = tight_spectrum(out.sgp);
  std::vector<Eigen::MatrixXcd> abstract_rows, concrete;
  for (int e : out.sgp.nonzero_idempotents()) {
    Eigen::MatrixXcd row =
        Eigen::MatrixXcd::Zero(1, static_cast<int>(sp.tight.size()));
    for (int i : sp.d_set(e)) row(0, i) = 1.0;
    abstract_rows.push_back(std::move(row));
    concrete.push_back(out.rep[e]);
  }
  out.idem_rank_abstract = subspace_rank(abstract_rows);
  out.idem_rank_concrete = subspace_rank(concrete);
  out.idem_injective = out.idem_rank_abstract == out.idem_rank_concrete;
  return out;
}

// ---------------------------------------------------------------------------
// text forms: "." is the empty word and "!" the zero element; "a|b" composes
// the word map with the reversed one; an optional third part "f1,f2@g"
// restricts by an idempotent

inline std::string word_or_dot(const std::string& w) {
  return w.empty() ? "." : w;
}

inline std::string show_sx(const Sft& S, const SxElement& e) {
  (void)S;
  if (e.zero) return "!";
  std::string s = word_or_dot(e.alpha) + "|" + word_or_dot(e.beta) + "[";
  for (size_t i = 0; i < e.dom.words.size(); ++i) {
    if (i) s += ",";
    s += word_or_dot(e.dom.words[i]);
  }
  return s + "]@" + std::to_string(e.dom.depth);
}

inline std::string parse_word_token(const std::string& t) {
  if (t == ".") return "";
  return t;
}

inline SxElement parse_sx(const Sft& S, const std::string& text) {
  if (text == "!") return sx_zero();
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) {
    std::string t = parts[0];
    bool star = !t.empty() && t.back() == '*';
    if (star) t.pop_back();
    SxElement e = sx_word(S, parse_word_token(t));
    return star ? sx_star(S, e) : e;
  }
  if (parts.size() > 3) throw Error(ErrKind::BadInput, "too many | parts");
  SxElement left = sx_word(S, parse_word_token(parts[0]));
  SxElement right = sx_star(S, sx_word(S, parse_word_token(parts[1])));
  if (parts.size() == 2) return sx_mul(S, left, right);
  std::string fpart = parts[2], gamma;
  if (auto at = fpart.find('@'); at != std::string::npos) {
    gamma = parse_word_token(fpart.substr(at + 1));
    fpart = fpart.substr(0, at);
  }
  std::vector<std::string> F;
  cur.clear();
  for (char c : fpart) {
    if (c == ',') {
      if (!cur.empty()) F.push_back(parse_word_token(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) F.push_back(parse_word_token(cur));
  return sx_mul(S, sx_mul(S, left, sx_idem(S, F, gamma)), right);
}

}  // namespace tgt::shift
