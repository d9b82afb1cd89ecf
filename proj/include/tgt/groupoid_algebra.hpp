#pragma once

// The finite-dimensional convolution *-algebra of a tight groupoid: exact
// integer convolution, the regular representation (one unit per orbit), the
// compression onto the locally trivial isotropy, block structure of the
// image algebra, and checkers for tight representations and for
// vertex/edge operator families on finite graphs.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

#include "tgt/germs.hpp"

namespace tgt {

using cplx = std::complex<double>;

// a finitely supported function on arrows; Scalar = long long keeps every
// structural identity exact, Scalar = cplx feeds the numerics
template <typename Scalar>
struct GFun {
  std::vector<Scalar> c;
  GFun() = default;
  explicit GFun(int n) : c(static_cast<size_t>(n), Scalar(0)) {}
  bool operator==(const GFun&) const = default;
};

namespace detail {
inline long long conj_of(long long x) { return x; }
inline double conj_of(double x) { return x; }
inline cplx conj_of(const cplx& x) { return std::conj(x); }
inline cplx to_c(long long x) { return {static_cast<double>(x), 0.0}; }
inline cplx to_c(double x) { return {x, 0.0}; }
inline cplx to_c(const cplx& x) { return x; }
}  // namespace detail

template <typename Scalar>
GFun<Scalar> operator+(GFun<Scalar> a, const GFun<Scalar>& b) {
  for (size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
  return a;
}

template <typename Scalar>
GFun<Scalar> operator-(GFun<Scalar> a, const GFun<Scalar>& b) {
  for (size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
  return a;
}

template <typename Scalar>
GFun<Scalar> operator*(Scalar w, GFun<Scalar> a) {
  for (auto& x : a.c) x = w * x;
  return a;
}

template <typename Scalar>
bool is_zero(const GFun<Scalar>& f) {
  for (const auto& x : f.c)
    if (x != Scalar(0)) return false;
  return true;
}

inline GFun<cplx> to_complex(const GFun<long long>& f) {
  GFun<cplx> out(static_cast<int>(f.c.size()));
  for (size_t i = 0; i < f.c.size(); ++i) out.c[i] = detail::to_c(f.c[i]);
  return out;
}

template <typename Scalar = long long>
GFun<Scalar> gf_delta(const TightGroupoid& G, int arrow, Scalar w = Scalar(1)) {
  GFun<Scalar> f(G.size());
  f.c.at(static_cast<size_t>(arrow)) = w;
  return f;
}

// T_s: indicator of the basic bisection of s over its whole domain
template <typename Scalar = long long>
GFun<Scalar> indicator(const TightGroupoid& G, const InverseSemigroup& S, int s) {
  GFun<Scalar> f(G.size());
  int dom = S.mul(S.star(s), s);
  if (dom == S.zero) return f;
  for (int g : G.theta_basis(S, s, dom)) f.c[g] = Scalar(1);
  return f;
}

// indicator of a set of units, given by tight-filter indices
template <typename Scalar = long long>
GFun<Scalar> unit_indicator(const TightGroupoid& G, const std::vector<int>& filters) {
  GFun<Scalar> f(G.size());
  for (int i : filters) f.c[G.units[i]] = Scalar(1);
  return f;
}

// (f g)(p) = sum of f(a) g(b) over factorizations a b = p
template <typename Scalar>
GFun<Scalar> convolve(const TightGroupoid& G, const GFun<Scalar>& f,
                      const GFun<Scalar>& g) {
  GFun<Scalar> out(G.size());
  for (int a = 0; a < G.size(); ++a) {
    if (f.c[a] == Scalar(0)) continue;
    for (int b = 0; b < G.size(); ++b) {
      if (g.c[b] == Scalar(0)) continue;
      if (auto p = G.mul(a, b)) out.c[*p] += f.c[a] * g.c[b];
    }
  }
  return out;
}

template <typename Scalar>
GFun<Scalar> adjoint(const TightGroupoid& G, const GFun<Scalar>& f) {
  GFun<Scalar> out(G.size());
  for (int a = 0; a < G.size(); ++a) out.c[G.inv(a)] = detail::conj_of(f.c[a]);
  return out;
}

// compression onto the germs of the locally trivial part; a conditional
// expectation since that subgroupoid is wide
template <typename Scalar>
GFun<Scalar> expectation(const TightGroupoid& G, const GFun<Scalar>& f) {
  GFun<Scalar> out(G.size());
  for (int g : G.siso_part) out.c[g] = f.c[g];
  return out;
}

// E(T_s) agrees with T_s cut down to the units where s acts locally
// trivially; both sides are computed independently, in integers
inline bool expectation_matches_z_region(const InverseSemigroup& S,
                                         const TightSpectrum& sp,
                                         const TightGroupoid& G, int s) {
  auto ts = indicator<long long>(G, S, s);
  auto zr = z_region(S, sp, s);
  return expectation(G, ts) == convolve(G, ts, unit_indicator<long long>(G, zr.z));
}

// regular representation: left translation on the arrows emitted by one
// chosen unit per orbit; faithful, block diagonal over orbits
class RegularRep {
 public:
  explicit RegularRep(const TightGroupoid& G) : G_(&G), pos_(G.size(), -1) {
    std::vector<char> seen(static_cast<size_t>(G.orbit_count()), 0);
    std::vector<char> take(static_cast<size_t>(G.unit_count()), 0);
    for (int i = 0; i < G.unit_count(); ++i) {
      int o = G.orbit_of_unit()[i];
      if (!seen[o]) {
        seen[o] = 1;
        take[i] = 1;
        chosen_.push_back(i);
      }
    }
    for (int g = 0; g < G.size(); ++g)
      if (take[G.src(g)]) pos_[g] = dim_++;
  }

  int dim() const { return dim_; }
  const std::vector<int>& chosen_units() const { return chosen_; }

  template <typename Scalar>
  Eigen::MatrixXcd matrix(const GFun<Scalar>& f) const {
    const TightGroupoid& G = *G_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (int g = 0; g < G.size(); ++g) {
      if (pos_[g] < 0) continue;
      for (int a = 0; a < G.size(); ++a) {
        if (f.c[a] == Scalar(0)) continue;
        if (G.src(a) != G.rng(g)) continue;
        m(pos_[*G.mul(a, g)], pos_[g]) += detail::to_c(f.c[a]);
      }
    }
    return m;
  }

 private:
  const TightGroupoid* G_;
  std::vector<int> pos_;
  std::vector<int> chosen_;
  int dim_ = 0;
};

inline double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

template <typename Scalar>
double reduced_norm(const RegularRep& rep, const GFun<Scalar>& f) {
  return operator_norm(rep.matrix(f));
}

// dimension of the span of a list of equal-shaped matrices
inline int subspace_rank(const std::vector<Eigen::MatrixXcd>& mats,
                         double tol = 1e-8) {
  if (mats.empty()) return 0;
  Eigen::Index n = mats[0].size();
  Eigen::MatrixXcd rows(static_cast<Eigen::Index>(mats.size()), n);
  for (size_t i = 0; i < mats.size(); ++i)
    rows.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::VectorXcd>(mats[i].data(), n).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rows);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cut = tol * std::max(1.0, sv(0));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

// coefficient vectors (one column each) spanning the center of the
// convolution algebra; exact linear algebra over the arrow basis
inline Eigen::MatrixXd center_basis(const TightGroupoid& G) {
  int n = G.size();
  Eigen::MatrixXd cons = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n) * n, n);
  for (int al = 0; al < n; ++al)
    for (int g = 0; g < n; ++g) {
      if (auto ga = G.mul(g, al)) cons(al * n + *ga, g) += 1.0;
      if (auto ag = G.mul(al, g)) cons(al * n + *ag, g) -= 1.0;
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(cons);
  if (lu.dimensionOfKernel() == 0) return Eigen::MatrixXd::Zero(n, 0);
  return lu.kernel();
}

struct BlockDecomposition {
  std::vector<int> dims;                      // ascending matrix-block sizes
  std::vector<Eigen::MatrixXcd> projections;  // minimal central projections
  int algebra_dim = 0;                        // equals the sum of dims squared
};

// split the image algebra into its simple blocks: take a random
// self-adjoint central element and cluster its eigenvalues
inline BlockDecomposition block_decomposition(const TightGroupoid& G,
                                              const RegularRep& rep,
                                              uint64_t seed = 0,
                                              double tol = 1e-8) {
  BlockDecomposition out;
  int n = G.size();
  if (n == 0 || rep.dim() == 0) return out;

  Eigen::MatrixXd K = center_basis(G);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  GFun<double> w(n);
  for (Eigen::Index j = 0; j < K.cols(); ++j) {
    double r = nd(rng);
    for (int g = 0; g < n; ++g) w.c[g] += r * K(g, j);
  }
  GFun<double> z = w + adjoint(G, w);

  Eigen::MatrixXcd zm = rep.matrix(z);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(zm);
  const auto& ev = es.eigenvalues();
  const auto& vec = es.eigenvectors();

  std::vector<Eigen::MatrixXcd> gens;
  gens.reserve(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) gens.push_back(rep.matrix(gf_delta<double>(G, g)));
  out.algebra_dim = subspace_rank(gens, tol);

  int total = 0;
  for (Eigen::Index start = 0; start < ev.size();) {
    Eigen::Index stop = start + 1;
    while (stop < ev.size() && ev(stop) - ev(stop - 1) <= tol) ++stop;
    Eigen::MatrixXcd basis = vec.middleCols(start, stop - start);
    Eigen::MatrixXcd proj = basis * basis.adjoint();
    std::vector<Eigen::MatrixXcd> comp;
    comp.reserve(gens.size());
    for (const auto& g : gens) comp.push_back(proj * g * proj);
    int d2 = subspace_rank(comp, tol);
    int d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(d2))));
    if (d * d != d2)
      throw Error(ErrKind::CharacterizationMismatch,
                  "eigenvalue cluster is not a single block", d2);
    out.dims.push_back(d);
    out.projections.push_back(std::move(proj));
    total += d * d;
    start = stop;
  }
  if (total != out.algebra_dim)
    throw Error(ErrKind::CharacterizationMismatch,
                "block dimensions do not add up", total, out.algebra_dim);

  std::vector<size_t> order(out.dims.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return out.dims[a] < out.dims[b]; });
  BlockDecomposition sorted;
  sorted.algebra_dim = out.algebra_dim;
  for (size_t i : order) {
    sorted.dims.push_back(out.dims[i]);
    sorted.projections.push_back(std::move(out.projections[i]));
  }
  return sorted;
}

struct UniquenessReport {
  bool ok = false;
  std::vector<int> block_dims;
  std::vector<int> meet_dims;  // per block: dim of (ideal meet subalgebra)
  int subalgebra_dim = 0;
};

// finite analog of the uniqueness property: every simple block of the
// image algebra meets the subalgebra spanned by the locally trivial
// indicators T_s in a nonzero subspace
inline UniquenessReport uniqueness_proxy(const InverseSemigroup& S,
                                         const TightGroupoid& G,
                                         const RegularRep& rep,
                                         uint64_t seed = 0, double tol = 1e-8) {
  UniquenessReport out;
  auto bd = block_decomposition(G, rep, seed, tol);
  out.block_dims = bd.dims;

  // span of {T_s : s locally trivial}; multiplicatively closed already,
  // since T_s T_t = T_{st} and that set of elements is closed
  std::vector<Eigen::MatrixXcd> agens;
  for (int s : s_iso(S)) agens.push_back(rep.matrix(indicator<long long>(G, S, s)));
  out.subalgebra_dim = subspace_rank(agens, tol);

  std::vector<Eigen::MatrixXcd> gens;
  for (int g = 0; g < G.size(); ++g)
    gens.push_back(rep.matrix(gf_delta<double>(G, g)));

  out.ok = true;
  for (const auto& proj : bd.projections) {
    std::vector<Eigen::MatrixXcd> bgens;
    bgens.reserve(gens.size());
    for (const auto& g : gens) bgens.push_back(proj * g);
    int rb = subspace_rank(bgens, tol);
    std::vector<Eigen::MatrixXcd> both = agens;
    both.insert(both.end(), bgens.begin(), bgens.end());
    int meet = out.subalgebra_dim + rb - subspace_rank(both, tol);
    out.meet_dims.push_back(meet);
    if (meet <= 0) out.ok = false;
  }
  return out;
}

// the map s -> matrix of T_s in the regular representation
inline std::vector<Eigen::MatrixXcd> canonical_tight_rep(
    const InverseSemigroup& S, const TightGroupoid& G, const RegularRep& rep) {
  std::vector<Eigen::MatrixXcd> v;
  v.reserve(static_cast<size_t>(S.size()));
  for (int s = 0; s < S.size(); ++s)
    v.push_back(rep.matrix(indicator<long long>(G, S, s)));
  return v;
}

// all inclusion-minimal covers of a nonzero idempotent e
inline std::vector<std::vector<int>> minimal_covers_of(const InverseSemigroup& S,
                                                       int e) {
  std::vector<int> below;
  for (int f : S.idempotents_below(e))
    if (f != S.zero) below.push_back(f);
  int k = static_cast<int>(below.size());
  if (k > 20) throw Error(ErrKind::SizeLimit, "too many idempotents below", e, k);
  std::vector<std::vector<int>> covers;
  std::vector<uint32_t> masks;
  for (uint32_t m = 1; m < (1u << k); ++m) {
    std::vector<int> c;
    for (int i = 0; i < k; ++i)
      if (m & (1u << i)) c.push_back(below[i]);
    if (is_cover_of_idempotent(S, c, e).ok) {
      covers.push_back(std::move(c));
      masks.push_back(m);
    }
  }
  std::vector<std::vector<int>> minimal;
  for (size_t i = 0; i < covers.size(); ++i) {
    bool min = true;
    for (size_t j = 0; j < covers.size() && min; ++j)
      if (j != i && (masks[j] & masks[i]) == masks[j]) min = false;
    if (min) minimal.push_back(covers[i]);
  }
  return minimal;
}

struct TightRepReport {
  bool ok = true;
  std::string what;    // violated relation, empty when ok
  int a = -1, b = -1;  // witness indices
};

// is s -> v[s] a zero-preserving *-homomorphism into matrices whose
// idempotent images turn covers into joins?
inline TightRepReport check_tight_representation(
    const InverseSemigroup& S, const std::vector<Eigen::MatrixXcd>& v,
    double tol = 1e-10) {
  TightRepReport out;
  auto fail = [&](const std::string& what, int a, int b) {
    out.ok = false;
    out.what = what;
    out.a = a;
    out.b = b;
  };
  if (static_cast<int>(v.size()) != S.size()) {
    fail("shape", static_cast<int>(v.size()), S.size());
    return out;
  }
  Eigen::Index d = v.empty() ? 0 : v[0].rows();
  for (const auto& m : v)
    if (m.rows() != d || m.cols() != d) {
      fail("shape", static_cast<int>(m.rows()), static_cast<int>(m.cols()));
      return out;
    }
  if (v[S.zero].norm() > tol) {
    fail("zero", S.zero, -1);
    return out;
  }
  for (int s = 0; s < S.size(); ++s) {
    if ((v[S.star(s)] - v[s].adjoint()).norm() > tol) {
      fail("star", s, -1);
      return out;
    }
    for (int t = 0; t < S.size(); ++t)
      if ((v[s] * v[t] - v[S.mul(s, t)]).norm() > tol) {
        fail("product", s, t);
        return out;
      }
  }
  for (int e : S.nonzero_idempotents()) {
    auto covers = minimal_covers_of(S, e);
    for (size_t ci = 0; ci < covers.size(); ++ci) {
      // join of commuting projections, folded in one at a time
      Eigen::MatrixXcd join = Eigen::MatrixXcd::Zero(d, d);
      for (int c : covers[ci]) join = join + v[c] - join * v[c];
      if ((join - v[e]).norm() > tol) {
        fail("cover-join", e, static_cast<int>(ci));
        return out;
      }
    }
  }
  return out;
}

// finite directed graph; edges are (source vertex, range vertex)
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

struct CkReport {
  bool ok = true;
  std::string what;
  int a = -1, b = -1;
};

// vertex projections p and edge operators s over a finite graph:
// p mutually orthogonal projections, s_e* s_e the source projection,
// and at every vertex that receives edges the range projections of the
// incoming edges add up to the vertex projection
inline CkReport check_ck_family(const Graph& gr,
                                const std::vector<Eigen::MatrixXcd>& p,
                                const std::vector<Eigen::MatrixXcd>& s,
                                double tol = 1e-10) {
  CkReport out;
  auto fail = [&](const std::string& what, int a, int b) {
    out.ok = false;
    out.what = what;
    out.a = a;
    out.b = b;
  };
  if (static_cast<int>(p.size()) != gr.vertices ||
      static_cast<int>(s.size()) != gr.edges.size()) {
    fail("shape", static_cast<int>(p.size()), static_cast<int>(s.size()));
    return out;
  }
  for (const auto& [a, b] : gr.edges)
    if (a < 0 || a >= gr.vertices || b < 0 || b >= gr.vertices) {
      fail("graph", a, b);
      return out;
    }
  for (int vi = 0; vi < gr.vertices; ++vi) {
    if ((p[vi] * p[vi] - p[vi]).norm() > tol ||
        (p[vi].adjoint() - p[vi]).norm() > tol) {
      fail("vertex-projection", vi, -1);
      return out;
    }
    for (int wj = 0; wj < gr.vertices; ++wj)
      if (vi != wj && (p[vi] * p[wj]).norm() > tol) {
        fail("vertex-orthogonality", vi, wj);
        return out;
      }
  }
  for (size_t ei = 0; ei < gr.edges.size(); ++ei)
    if ((s[ei].adjoint() * s[ei] - p[gr.edges[ei].first]).norm() > tol) {
      fail("edge-domain", static_cast<int>(ei), gr.edges[ei].first);
      return out;
    }
  for (int vi = 0; vi < gr.vertices; ++vi) {
    bool receives = false;
    Eigen::MatrixXcd sum =
        Eigen::MatrixXcd::Zero(p[vi].rows(), p[vi].cols());
    for (size_t ei = 0; ei < gr.edges.size(); ++ei)
      if (gr.edges[ei].second == vi) {
        receives = true;
        sum += s[ei] * s[ei].adjoint();
      }
    if (receives && (sum - p[vi]).norm() > tol) {
      fail("vertex-sum", vi, -1);
      return out;
    }
  }
  return out;
}

}  // namespace tgt
