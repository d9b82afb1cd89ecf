#pragma once

// Named invariant suites and the full analysis report. Every suite runs one
// machine-checkable statement over a target structure and reports pass,
// fail, or unknown together with a witness string. Targets default to the
// bundled structures when the caller pins none of the matching kind.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tgt/builders.hpp"
#include "tgt/groupoid_algebra.hpp"
#include "tgt/json_io.hpp"

namespace tgt::report {

enum class Outcome { Pass, Fail, Unknown };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

struct SuiteResult {
  std::string suite;
  std::string target;
  Outcome outcome = Outcome::Unknown;
  std::string detail;  // witness or counterexample reference
};

struct Options {
  std::uint64_t seed = 0;
  int depth = 3;
};

// named subshifts available to the CLI and the default suite targets
inline std::vector<std::pair<std::string, shift::Sft>> named_shifts() {
  return {
      {"golden-mean", shift::Sft::make("01", {"11"})},
      {"full-2", shift::Sft::make("01", {})},
      {"one-letter", shift::Sft::make("a", {})},
      {"two-cycle", shift::Sft::make("ab", {"aa", "bb"})},
  };
}

inline shift::Sft shift_by_name(const std::string& name) {
  for (auto& [n, X] : named_shifts())
    if (n == name) return X;
  throw Error(ErrKind::BadInput, "no bundled shift named '" + name + "'");
}

inline std::vector<std::pair<std::string, lcm::Monoid>> default_monoids() {
  return {
      {"free-2", lcm::Monoid::free_monoid(2)},
      {"grid-2", lcm::Monoid::lattice_nk(2)},
      {"free-2-x-grid-1", lcm::Monoid::product(2, 1)},
  };
}

// which target kinds a suite consumes
struct SuiteInfo {
  std::string name;
  bool on_semigroup = false;
  bool on_monoid = false;
  bool on_shift = false;
  std::string summary;
};

inline const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> r = {
      {"siso-subsemigroup", true, false, false,
       "the locally trivial elements form a *-subsemigroup containing every idempotent"},
      {"0dis", true, false, false,
       "the idempotent centralizer sits inside the locally trivial part, and equals it "
       "when nonzero idempotents always admit disjoint refinements"},
      {"zdef", true, false, false,
       "Z-regions do not depend on the chosen cover of the weakly fixed set"},
      {"sisogiso", true, false, false,
       "locally trivial germs are exactly the interior isotropy germs"},
      {"condexp", true, false, false,
       "compression to the locally trivial germs is a faithful conditional "
       "expectation and matches the Z-region cut on every generator"},
      {"uniqueness", true, false, false,
       "every matrix block of the groupoid algebra meets the locally trivial "
       "subalgebra in a nonzero subspace"},
      {"covertojoin", true, false, true,
       "representations turn finite covers into joins: checked on the canonical "
       "generator matrices and on cylinder splittings of subshift domains"},
      {"lcm1", false, true, false,
       "sandwiching a locally trivial pair between [1,b] and [b,1] lands in the core"},
      {"lcm2", false, true, false,
       "for a locally trivial pair the boundary sees pP, qP and (p lcm q)P as one set"},
      {"fixonepoint", false, false, true,
       "a prefix-exchange map with distinct word lengths fixes at most one point"},
      {"fixedultra", false, false, true,
       "the point ultrafilter fixed by e*fe matches membership of the moved point"},
      {"sisoidem", false, false, true,
       "over a subshift the locally trivial elements are exactly the idempotents"},
  };
  return r;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suite_registry()) out.push_back(s.name);
  return out;
}

namespace detail {

inline SuiteResult mk(std::string suite, std::string target, bool ok,
                      std::string detail) {
  return {std::move(suite), std::move(target),
          ok ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

// ----- semigroup suites -----

inline SuiteResult run_siso_subsemigroup(const std::string& tn,
                                         const InverseSemigroup& S) {
  auto iso = s_iso(S);
  std::set<int> in(iso.begin(), iso.end());
  for (int e : S.idempotents())
    if (!in.count(e))
      return mk("siso-subsemigroup", tn, false,
                "idempotent " + S.elements[e] + " is not locally trivial");
  for (int s : iso) {
    if (!in.count(S.star(s)))
      return mk("siso-subsemigroup", tn, false,
                "star leaves the set at " + S.elements[s]);
    for (int t : iso)
      if (!in.count(S.mul(s, t)))
        return mk("siso-subsemigroup", tn, false,
                  "product leaves the set at " + S.elements[s] + "*" + S.elements[t]);
  }
  return mk("siso-subsemigroup", tn, true,
            std::to_string(iso.size()) + " of " + std::to_string(S.size()) +
                " elements, closed under product and star");
}

inline SuiteResult run_0dis(const std::string& tn, const InverseSemigroup& S) {
  auto cen = centralizer(S);
  auto iso = s_iso(S);
  if (!std::includes(iso.begin(), iso.end(), cen.begin(), cen.end())) {
    int w = -1;
    for (int s : cen)
      if (!std::binary_search(iso.begin(), iso.end(), s)) w = s;
    return mk("0dis", tn, false,
              "central element " + S.elements[w] + " is not locally trivial");
  }
  auto lem = lemma_0dis_check(S);
  if (!lem.applicable) {
    auto zd = is_zero_disjunctive(S);
    return mk("0dis", tn, true,
              "not 0-disjunctive (no disjoint refinement of " + S.elements[zd.e] +
                  " below " + S.elements[zd.f] +
                  "); centralizer still inside the locally trivial part" +
                  (cen != iso ? " (strictly)" : ""));
  }
  if (!lem.ok) return mk("0dis", tn, false, lem.detail);
  return mk("0dis", tn, true,
            "0-disjunctive; centralizer equals the locally trivial part and acts "
            "trivially below its domains");
}

inline SuiteResult run_zdef(const std::string& tn, const InverseSemigroup& S) {
  auto sp = tight_spectrum(S);
  try {
    for (int s = 0; s < S.size(); ++s) {
      auto z = z_region(S, sp, s);
      // every member of the region really lies in some D_c of the cover
      for (int i : z.z) {
        bool hit = false;
        for (int c : z.cover)
          if (sp.tight[i].contains(c)) hit = true;
        if (!hit)
          return mk("zdef", tn, false,
                    "region of " + S.elements[s] + " exceeds its cover union");
      }
    }
  } catch (const Error& e) {
    return mk("zdef", tn, false, e.what());
  }
  return mk("zdef", tn, true,
            "all " + std::to_string(S.size()) + " regions agree across covers");
}

inline SuiteResult run_sisogiso(const std::string& tn, const InverseSemigroup& S) {
  auto sp = tight_spectrum(S);
  auto G = tight_groupoid(S, sp);
  auto a = G.siso_part;
  auto b = G.iso_interior;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    return mk("sisogiso", tn, false,
              "locally trivial germs differ from interior isotropy germs");
  std::vector<int> iso = G.iso;
  std::sort(iso.begin(), iso.end());
  if (!std::includes(iso.begin(), iso.end(), a.begin(), a.end()))
    return mk("sisogiso", tn, false, "an interior germ lies outside the isotropy");
  return mk("sisogiso", tn, true,
            std::to_string(a.size()) + " interior isotropy germs of " +
                std::to_string(iso.size()) + " isotropy germs");
}

inline SuiteResult run_condexp(const std::string& tn, const InverseSemigroup& S,
                               const Options& opt) {
  auto sp = tight_spectrum(S);
  auto G = tight_groupoid(S, sp);
  for (int s = 0; s < S.size(); ++s)
    if (!expectation_matches_z_region(S, sp, G, s))
      return mk("condexp", tn, false,
                "cut formula fails at generator " + S.elements[s]);
  std::mt19937_64 rng(opt.seed ^ 0x5u);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  auto iso = s_iso(S);
  const int trials = 12;
  for (int t = 0; t < trials; ++t) {
    GFun<long long> f(G.size());
    for (auto& x : f.c) x = coeff(rng);
    if (expectation(G, expectation(G, f)) != expectation(G, f))
      return mk("condexp", tn, false, "compression is not idempotent");
    int s = iso[rng() % iso.size()];
    int u = iso[rng() % iso.size()];
    auto ts = indicator<long long>(G, S, s);
    auto tu = indicator<long long>(G, S, u);
    auto lhs = expectation(G, convolve(G, ts, convolve(G, f, tu)));
    auto rhs = convolve(G, ts, convolve(G, expectation(G, f), tu));
    if (lhs != rhs)
      return mk("condexp", tn, false,
                "bimodule identity fails over " + S.elements[s] + ", " + S.elements[u]);
    auto ff = convolve(G, adjoint(G, f), f);
    auto d = expectation(G, ff);
    long long total = 0;
    for (int un : G.units) total += d.c[un];
    long long expect = 0;
    for (auto x : f.c) expect += x * x;
    if (total != expect || (is_zero(d) && !is_zero(f)))
      return mk("condexp", tn, false, "compression is not faithful on f*f");
  }
  return mk("condexp", tn, true,
            "cut formula exact on all " + std::to_string(S.size()) +
                " generators; idempotent, bimodule and faithful on " +
                std::to_string(trials) + " seeded samples");
}

inline SuiteResult run_uniqueness(const std::string& tn, const InverseSemigroup& S,
                                  const Options& opt) {
  auto sp = tight_spectrum(S);
  auto G = tight_groupoid(S, sp);
  RegularRep rep(G);
  auto uq = uniqueness_proxy(S, G, rep, opt.seed);
  std::string dims;
  for (size_t i = 0; i < uq.block_dims.size(); ++i)
    dims += (i ? "," : "") + std::to_string(uq.block_dims[i]) + "x" +
            std::to_string(uq.block_dims[i]) + "(meet " +
            std::to_string(uq.meet_dims[i]) + ")";
  return mk("uniqueness", tn, uq.ok, "blocks " + dims);
}

inline SuiteResult run_covertojoin_sgp(const std::string& tn,
                                       const InverseSemigroup& S) {
  auto sp = tight_spectrum(S);
  auto G = tight_groupoid(S, sp);
  RegularRep rep(G);
  auto mats = canonical_tight_rep(S, G, rep);
  auto tr = check_tight_representation(S, mats);
  if (!tr.ok) {
    std::string w = tr.what;
    if (tr.a >= 0) w += " at " + S.elements[tr.a];
    if (tr.b >= 0) w += ", " + S.elements[tr.b];
    return mk("covertojoin", tn, false, w);
  }
  return mk("covertojoin", tn, true,
            "canonical generator matrices send covers to joins on " +
                std::to_string(S.size()) + " generators");
}

// ----- monoid suites -----

inline std::vector<lcm::Pair> eligible_pairs(const lcm::Monoid& M, int depth) {
  std::vector<lcm::Pair> out;
  auto elems = lcm::elements_up_to(M, depth);
  for (const auto& p : elems)
    for (const auto& q : elems) {
      auto x = lcm::pair_make(M, p, q);
      if (!x.zero && lcm::in_s_iso(M, x) && M.right_lcm(x.p, x.q))
        out.push_back(x);
    }
  return out;
}

inline SuiteResult run_lcm1(const std::string& tn, const lcm::Monoid& M,
                            const Options& opt) {
  int pd = std::min(opt.depth, 2);
  int checked = 0;
  for (const auto& x : eligible_pairs(M, pd)) {
    auto r = M.right_lcm(x.p, x.q);
    for (const auto& m : lcm::elements_up_to(M, 1)) {
      auto b = M.mul(*r, m);
      auto rep = lcm::lemma_lcm1_check(M, x, b);
      ++checked;
      if (!rep.ok)
        return mk("lcm1", tn, false,
                  "sandwich of " + lcm::show_pair(M, x) + " by b = " +
                      lcm::show(M, b) + " leaves the core: " +
                      lcm::show_pair(M, rep.result));
    }
  }
  return mk("lcm1", tn, true,
            std::to_string(checked) + " sandwiches land in core pairs");
}

inline SuiteResult run_lcm2(const std::string& tn, const lcm::Monoid& M,
                            const Options& opt) {
  int pd = std::min(opt.depth, 2);
  int checked = 0;
  for (const auto& x : eligible_pairs(M, pd)) {
    auto rep = lcm::lemma_lcm2_check(M, x, opt.depth);
    ++checked;
    if (!rep.ok)
      return mk("lcm2", tn, false,
                "pair " + lcm::show_pair(M, x) + ": " + rep.detail);
  }
  int pts = static_cast<int>(lcm::boundary_points(M, opt.depth).size());
  return mk("lcm2", tn, true,
            std::to_string(checked) + " pairs against " + std::to_string(pts) +
                " boundary points at depth " + std::to_string(opt.depth));
}

// ----- subshift suites -----

inline SuiteResult run_covertojoin_shift(const std::string& tn,
                                         const shift::Sft& X,
                                         const Options& opt) {
  using namespace tgt::shift;
  int wd = std::min(opt.depth, 2);
  int checked = 0;
  bool unknown = false;
  for (int len = 0; len <= wd; ++len)
    for (const auto& w : live_words(X, len)) {
      auto e = sx_idem(X, {}, w);
      std::vector<SxElement> parts;
      for (const auto& ww : extend_word(X, w, len + 1)) parts.push_back(sx_idem(X, {}, ww));
      if (parts.empty()) continue;
      auto rep = cover_domain_union(X, e, parts, opt.depth + X.k() + 2);
      ++checked;
      if (rep.cover == Verdict::False)
        return mk("covertojoin", tn, false,
                  "cylinder split of " + word_or_dot(w) +
                      " is not a cover, witness " + rep.witness.value_or("?"));
      if (rep.cover == Verdict::Unknown) unknown = true;
      if (!rep.union_matches)
        return mk("covertojoin", tn, false,
                  "cylinder split of " + word_or_dot(w) + " misses the union");
    }
  if (unknown)
    return {"covertojoin", tn, Outcome::Unknown,
            "search depth exhausted before the cover was settled"};
  return mk("covertojoin", tn, true,
            std::to_string(checked) +
                " cylinder splittings cover and union back to their domain");
}

inline SuiteResult run_fixonepoint(const std::string& tn, const shift::Sft& X,
                                   const Options& opt) {
  using namespace tgt::shift;
  std::vector<std::string> words;
  for (int len = 0; len <= std::min(opt.depth, 3); ++len)
    for (const auto& w : live_words(X, len)) words.push_back(w);
  std::mt19937_64 rng(opt.seed ^ 0x11u);
  int tried = 0;
  for (int t = 0; t < 200 && !words.empty(); ++t) {
    const auto& a = words[rng() % words.size()];
    const auto& b = words[rng() % words.size()];
    if (a.size() == b.size()) continue;
    auto e = sx_make(X, a, b, whole_space(X));
    if (e.zero) continue;
    ++tried;
    auto fp = fixed_points(X, e);
    if (fp.points.size() > 1)
      return mk("fixonepoint", tn, false,
                show_sx(X, e) + " fixes " + std::to_string(fp.points.size()) +
                    " points");
  }
  return mk("fixonepoint", tn, true,
            std::to_string(tried) + " seeded maps with distinct word lengths fix "
                                    "at most one point each");
}

inline SuiteResult run_fixedultra(const std::string& tn, const shift::Sft& X,
                                  const Options& opt) {
  using namespace tgt::shift;
  std::mt19937_64 rng(opt.seed ^ 0x21u);
  auto vocab = live_words(X, std::min(opt.depth, 3));
  auto shorter = live_words(X, std::max(1, std::min(opt.depth, 3) - 1));
  vocab.insert(vocab.end(), shorter.begin(), shorter.end());
  vocab.push_back("");
  auto points = sample_points(X, whole_space(X), 3);
  int checked = 0;
  for (const auto& e : enumerate_elements(X, 2)) {
    if (e.zero) continue;
    for (const auto& x : points) {
      if (!contains_point(X, e.dom, x)) continue;
      Pt y = theta_on_point(X, e, x);
      PointUltrafilter xi{y};
      for (int t = 0; t < 5; ++t) {
        std::vector<std::string> F = {vocab[rng() % vocab.size()]};
        const std::string& v = vocab[rng() % vocab.size()];
        SxElement f = sx_idem(X, F, v);
        SxElement pulled = sx_mul(X, sx_mul(X, sx_star(X, e), f), e);
        bool via_filter = !pulled.zero && contains_point(X, pulled.dom, x);
        ++checked;
        if (via_filter != xi.contains(X, F, v))
          return mk("fixedultra", tn, false,
                    "pulled-back membership of E({" + word_or_dot(F[0]) + "};" +
                        word_or_dot(v) + ") through " + show_sx(X, e) +
                        " disagrees at the image point");
      }
    }
  }
  return mk("fixedultra", tn, true,
            std::to_string(checked) + " membership queries agree with the moved point");
}

inline SuiteResult run_sisoidem(const std::string& tn, const shift::Sft& X,
                                const Options& opt) {
  using namespace tgt::shift;
  auto rep = siso_sample_check(X, std::min(opt.depth, 2));
  if (!rep.ok)
    return mk("sisoidem", tn, false,
              "a non-idempotent acts trivially on its sampled domain");
  return mk("sisoidem", tn, true,
            std::to_string(rep.idempotents) + " idempotents and " +
                std::to_string(rep.moved) + " moved witnesses among " +
                std::to_string(rep.elements) + " elements");
}

}  // namespace detail

// targets a run operates on; empty vectors fall back to the bundled ones
struct Targets {
  std::vector<std::pair<std::string, InverseSemigroup>> semigroups;
  std::vector<std::pair<std::string, lcm::Monoid>> monoids;
  std::vector<std::pair<std::string, shift::Sft>> shifts;
};

inline Targets default_targets() {
  Targets t;
  for (const auto& n : builders::builder_names()) t.semigroups.emplace_back(n, builders::by_name(n));
  t.monoids = default_monoids();
  t.shifts = named_shifts();
  return t;
}

inline std::vector<SuiteResult> run_suite(const std::string& name,
                                          const Targets& given,
                                          const Options& opt) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& info : suite_registry()) {
      auto r = run_suite(info.name, given, opt);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  const SuiteInfo* info = nullptr;
  for (const auto& s : suite_registry())
    if (s.name == name) info = &s;
  if (!info) throw Error(ErrKind::UnknownSuite, "no suite named '" + name + "'");

  Targets defaults;
  auto semigroups = [&]() -> const std::vector<std::pair<std::string, InverseSemigroup>>& {
    if (!given.semigroups.empty()) return given.semigroups;
    if (defaults.semigroups.empty()) defaults = default_targets();
    return defaults.semigroups;
  };
  auto monoids = [&]() -> const std::vector<std::pair<std::string, lcm::Monoid>>& {
    if (!given.monoids.empty()) return given.monoids;
    if (defaults.monoids.empty()) defaults = default_targets();
    return defaults.monoids;
  };
  auto shifts = [&]() -> const std::vector<std::pair<std::string, shift::Sft>>& {
    if (!given.shifts.empty()) return given.shifts;
    if (defaults.shifts.empty()) defaults = default_targets();
    return defaults.shifts;
  };

  // a pinned target of a supported kind narrows the suite to that kind
  bool pin_s = info->on_semigroup && !given.semigroups.empty();
  bool pin_m = info->on_monoid && !given.monoids.empty();
  bool pin_x = info->on_shift && !given.shifts.empty();
  bool pinned = pin_s || pin_m || pin_x;

  if (info->on_semigroup && (!pinned || pin_s))
    for (const auto& [tn, S] : semigroups()) {
      if (name == "siso-subsemigroup") out.push_back(detail::run_siso_subsemigroup(tn, S));
      else if (name == "0dis") out.push_back(detail::run_0dis(tn, S));
      else if (name == "zdef") out.push_back(detail::run_zdef(tn, S));
      else if (name == "sisogiso") out.push_back(detail::run_sisogiso(tn, S));
      else if (name == "condexp") out.push_back(detail::run_condexp(tn, S, opt));
      else if (name == "uniqueness") out.push_back(detail::run_uniqueness(tn, S, opt));
      else if (name == "covertojoin") out.push_back(detail::run_covertojoin_sgp(tn, S));
    }
  if (info->on_monoid && (!pinned || pin_m))
    for (const auto& [tn, M] : monoids()) {
      if (name == "lcm1") out.push_back(detail::run_lcm1(tn, M, opt));
      else if (name == "lcm2") out.push_back(detail::run_lcm2(tn, M, opt));
    }
  if (info->on_shift && (!pinned || pin_x))
    for (const auto& [tn, X] : shifts()) {
      if (name == "covertojoin") out.push_back(detail::run_covertojoin_shift(tn, X, opt));
      else if (name == "fixonepoint") out.push_back(detail::run_fixonepoint(tn, X, opt));
      else if (name == "fixedultra") out.push_back(detail::run_fixedultra(tn, X, opt));
      else if (name == "sisoidem") out.push_back(detail::run_sisoidem(tn, X, opt));
    }
  return out;
}

// 0 all pass, 1 any fail, 2 unknown without fail (0 when unknown is allowed)
inline int exit_code_for(const std::vector<SuiteResult>& rs, bool allow_unknown) {
  bool fail = false, unknown = false;
  for (const auto& r : rs) {
    if (r.outcome == Outcome::Fail) fail = true;
    if (r.outcome == Outcome::Unknown) unknown = true;
  }
  if (fail) return 1;
  if (unknown && !allow_unknown) return 2;
  return 0;
}

inline io::json suites_to_json(const std::vector<SuiteResult>& rs) {
  io::json a = io::json::array();
  for (const auto& r : rs) {
    io::json o;
    o["suite"] = r.suite;
    o["target"] = r.target;
    o["outcome"] = outcome_name(r.outcome);
    o["detail"] = r.detail;
    a.push_back(std::move(o));
  }
  return a;
}

// full pipeline over one semigroup: spectrum, isotropy, groupoid, matrix
// blocks, expectation formula, uniqueness, and the semigroup suites
inline io::json analyze_semigroup(const std::string& label,
                                  const InverseSemigroup& S, const Options& opt) {
  io::json j;
  j["input"] = {{"name", label},
                {"elements", S.size()},
                {"zero_adjoined", S.zero_adjoined}};
  auto sp = tight_spectrum(S);
  j["spectrum"] = io::spectrum_to_json(S, sp);
  j["isotropy"] = io::isotropy_to_json(S, sp);
  auto G = tight_groupoid(S, sp);
  io::json gj;
  gj["arrows"] = G.size();
  gj["units"] = G.unit_count();
  gj["orbits"] = G.orbit_count();
  gj["effective"] = G.effective;
  gj["export"] = io::groupoid_to_json(S, sp, G);
  j["groupoid"] = std::move(gj);
  RegularRep rep(G);
  auto uq = uniqueness_proxy(S, G, rep, opt.seed);
  bool cut = true;
  for (int s = 0; s < S.size(); ++s)
    if (!expectation_matches_z_region(S, sp, G, s)) cut = false;
  io::json blocks = io::json::array();
  for (size_t i = 0; i < uq.block_dims.size(); ++i)
    blocks.push_back({{"dimension", uq.block_dims[i]},
                      {"subalgebra_intersection_dim", uq.meet_dims[i]}});
  j["cstar"] = {{"representation_dim", rep.dim()},
                {"block_dims", uq.block_dims},
                {"blocks", std::move(blocks)},
                {"expectation_formula", cut},
                {"uniqueness", uq.ok}};
  Targets one;
  one.semigroups.emplace_back(label, S);
  std::vector<SuiteResult> rs;
  for (const char* nm : {"siso-subsemigroup", "0dis", "zdef", "sisogiso",
                         "condexp", "uniqueness", "covertojoin"}) {
    auto r = run_suite(nm, one, opt);
    rs.insert(rs.end(), r.begin(), r.end());
  }
  j["suites"] = suites_to_json(rs);
  return j;
}

}  // namespace tgt::report
