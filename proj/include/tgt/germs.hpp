#pragma once

// The groupoid of germs over the tight spectrum: arrows are equivalence
// classes of pairs (element, tight filter), composition is inherited from
// the semigroup, and the isotropy bundle is split into its interior and
// the part seen by the local-identity subsemigroup.

#include "tgt/isotropy.hpp"

namespace tgt {

// theta_s(xi) = up-closure of {ses* : e in xi}; defined on D_{s*s}
inline Filter theta(const InverseSemigroup& S, int s, const Filter& xi) {
  int dom = S.mul(S.star(s), s);
  if (!xi.contains(dom))
    throw Error(ErrKind::DomainViolation,
                "filter misses " + S.elements[S.star(s)] + S.elements[s], s);
  std::vector<int> image;
  for (int e : xi.members) {
    int f = S.mul(S.mul(s, e), S.star(s));
    if (f != S.zero) image.push_back(f);
  }
  Filter out;
  out.members = up_closure(S, image);
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()),
                    out.members.end());
  int mn = out.members.at(0);
  for (int e : out.members)
    if (S.leq(e, mn)) mn = e;
  out.minimum = mn;
  return out;
}

// is there e in xi with se = te? Throws only when xi carries a germ of
// neither element; a positive answer forces both domains into xi anyway.
inline bool germ_eq(const InverseSemigroup& S, int s, int t, const Filter& xi) {
  bool ds = xi.contains(S.mul(S.star(s), s));
  bool dt = xi.contains(S.mul(S.star(t), t));
  if (!ds && !dt)
    throw Error(ErrKind::DomainViolation, "filter misses both domains", s, t);
  for (int e : xi.members)
    if (S.mul(s, e) == S.mul(t, e)) return true;
  return false;
}

struct Arrow {
  int rep = -1;                // least element index in the class
  int src = -1, rng = -1;      // tight-spectrum positions
  std::vector<int> members;    // all elements sharing this germ, ascending
};

class TightGroupoid {
 public:
  std::vector<Arrow> arrows;
  std::vector<int> units;         // arrow ids, one per tight filter, by filter
  std::vector<int> iso;           // arrows with src == rng
  std::vector<int> iso_interior;  // germs carrying a weakly fixed idempotent
  std::vector<int> siso_part;     // germs with a representative acting locally trivially
  std::vector<int> x_f;           // units whose whole isotropy group lies in siso_part
  bool effective = false;

  int size() const { return static_cast<int>(arrows.size()); }
  int unit_count() const { return static_cast<int>(units.size()); }

  int src(int g) const { return arrows[g].src; }
  int rng(int g) const { return arrows[g].rng; }
  int inv(int g) const { return inv_[g]; }
  // defined iff src(a) == rng(b); the product a b acts "b first"
  std::optional<int> mul(int a, int b) const {
    int p = mul_[static_cast<size_t>(a) * arrows.size() + b];
    return p < 0 ? std::nullopt : std::optional<int>(p);
  }

  // the arrow of the pair (s, xi_i); -1 when s*s is not in the filter
  int germ_of(int s, int i) const { return germ_[static_cast<size_t>(s) * nt_ + i]; }

  // Theta(s, D_e): the basic bisection of s over D_e (within D_{s*s})
  std::vector<int> theta_basis(const InverseSemigroup& S, int s, int e) const {
    if (!S.is_idempotent(e))
      throw Error(ErrKind::PreconditionE, "basis needs an idempotent", e);
    int dom = S.mul(S.star(s), s);
    std::vector<int> out;
    for (int i = 0; i < nt_; ++i) {
      const Filter& xi = tight_[i];
      if (xi.contains(e) && xi.contains(dom)) out.push_back(germ_of(s, i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // orbit id per unit (connected components through arrows)
  const std::vector<int>& orbit_of_unit() const { return orbit_; }
  int orbit_count() const { return orbit_count_; }

  friend TightGroupoid tight_groupoid(const InverseSemigroup& S,
                                      const TightSpectrum& sp);

 private:
  int nt_ = 0;
  std::vector<Filter> tight_;
  std::vector<int> germ_;
  std::vector<int> inv_;
  std::vector<int> mul_;
  std::vector<int> orbit_;
  int orbit_count_ = 0;
};

inline TightGroupoid tight_groupoid(const InverseSemigroup& S,
                                    const TightSpectrum& sp) {
  TightGroupoid G;
  G.nt_ = static_cast<int>(sp.tight.size());
  G.tight_ = sp.tight;
  G.germ_.assign(static_cast<size_t>(S.size()) * G.nt_, -1);

  // germ classes, filter by filter, classes ordered by least member
  for (int i = 0; i < G.nt_; ++i) {
    const Filter& xi = sp.tight[i];
    std::vector<int> elems;
    for (int s = 0; s < S.size(); ++s)
      if (xi.contains(S.mul(S.star(s), s))) elems.push_back(s);
    std::vector<char> done(elems.size(), 0);
    for (size_t a = 0; a < elems.size(); ++a) {
      if (done[a]) continue;
      Arrow arr;
      arr.rep = elems[a];
      arr.src = i;
      for (size_t b = a; b < elems.size(); ++b) {
        if (done[b]) continue;
        if (germ_eq(S, elems[a], elems[b], xi)) {
          done[b] = 1;
          arr.members.push_back(elems[b]);
        }
      }
      int id = static_cast<int>(G.arrows.size());
      for (int m : arr.members) G.germ_[static_cast<size_t>(m) * G.nt_ + i] = id;
      G.arrows.push_back(std::move(arr));
    }
  }

  // ranges via theta; every tight filter must land on a tight filter
  for (auto& arr : G.arrows) {
    Filter img = theta(S, arr.rep, sp.tight[arr.src]);
    int j = sp.index_of(img);
    if (j < 0)
      throw Error(ErrKind::CharacterizationMismatch,
                  "theta image of a tight filter is not tight", arr.rep);
    arr.rng = j;
  }

  // units: the class of any idempotent of the filter
  G.units.resize(G.nt_);
  for (int i = 0; i < G.nt_; ++i)
    G.units[i] = G.germ_of(sp.tight[i].minimum, i);

  // composition and inversion
  size_t n = G.arrows.size();
  G.mul_.assign(n * n, -1);
  G.inv_.assign(n, -1);
  for (size_t a = 0; a < n; ++a) {
    const Arrow& A = G.arrows[a];
    G.inv_[a] = G.germ_of(S.star(A.rep), A.rng);
    for (size_t b = 0; b < n; ++b) {
      const Arrow& B = G.arrows[b];
      if (A.src != B.rng) continue;
      G.mul_[a * n + b] = G.germ_of(S.mul(A.rep, B.rep), B.src);
    }
  }

  // isotropy decomposition
  auto siso = s_iso(S);
  for (int g = 0; g < static_cast<int>(n); ++g) {
    const Arrow& A = G.arrows[g];
    if (A.src != A.rng) continue;
    G.iso.push_back(g);
    const Filter& xi = sp.tight[A.src];
    bool interior = false;
    for (int e : weakly_fixed_set(S, A.rep))
      if (xi.contains(e)) {
        interior = true;
        break;
      }
    if (interior) G.iso_interior.push_back(g);
    bool in_siso = false;
    for (int m : A.members)
      if (std::binary_search(siso.begin(), siso.end(), m)) {
        in_siso = true;
        break;
      }
    if (in_siso) G.siso_part.push_back(g);
  }
  for (int i = 0; i < G.nt_; ++i) {
    bool all = true;
    for (int g : G.iso)
      if (G.arrows[g].src == i &&
          !std::binary_search(G.siso_part.begin(), G.siso_part.end(), g))
        all = false;
    if (all) G.x_f.push_back(i);
  }
  {
    std::vector<int> u = G.units;
    std::sort(u.begin(), u.end());
    G.effective = (G.iso_interior == u);
  }

  // orbits of units
  G.orbit_.assign(G.nt_, -1);
  for (int i = 0; i < G.nt_; ++i) {
    if (G.orbit_[i] >= 0) continue;
    int id = G.orbit_count_++;
    std::vector<int> stack = {i};
    G.orbit_[i] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& arr : G.arrows) {
        int v = -1;
        if (arr.src == u) v = arr.rng;
        else if (arr.rng == u) v = arr.src;
        if (v >= 0 && G.orbit_[v] < 0) {
          G.orbit_[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  return G;
}

}  // namespace tgt
