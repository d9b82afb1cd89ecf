#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "tgt/subshift.hpp"

using namespace tgt;
using namespace tgt::shift;

namespace {
Sft golden() { return Sft::make("01", {"11"}); }
Sft one_letter() { return Sft::make("a", {}); }
Sft two_point() { return Sft::make("ab", {"aa", "bb"}); }

std::vector<Sft> spaces() { return {golden(), one_letter(), two_point()}; }
}  // namespace

TEST_CASE("block graph prunes dead states") {
  Sft G = golden();
  REQUIRE(G.vertices() == std::vector<std::string>{"0", "1"});
  REQUIRE(G.live("10"));
  REQUIRE_FALSE(G.live("11"));
  REQUIRE(G.live("0101"));
  REQUIRE_FALSE(G.live("0110"));
  // a letter that can never continue disappears
  Sft D = Sft::make("01", {"10", "11"});
  REQUIRE(D.vertices() == std::vector<std::string>{"0"});
  REQUIRE_FALSE(D.live("1"));
  REQUIRE_THROWS_AS(Sft::make("01", {"12"}), Error);
  REQUIRE_THROWS_AS(Sft::make("00", {}), Error);
}

TEST_CASE("cylinders normalize to a canonical form") {
  Sft G = golden();
  ClopenSet c1 = cylinder(G, "1");
  REQUIRE(c1.depth == 1);
  REQUIRE(c1.words == std::vector<std::string>{"1"});
  REQUIRE(expand(G, c1, 2).words == std::vector<std::string>{"10"});
  REQUIRE(cylinder(G, "11").empty());
  // the same set assembled at a deeper level reduces back
  REQUIRE(normalize(G, 2, {"10"}) == c1);
  REQUIRE(normalize(G, 2, {"00", "01"}) == cylinder(G, "0"));
  REQUIRE(clopen_union(G, cylinder(G, "0"), cylinder(G, "10")) ==
          whole_space(G));
  REQUIRE(clopen_intersect(G, cylinder(G, "0"), cylinder(G, "1")).empty());
  REQUIRE(clopen_minus(G, whole_space(G), cylinder(G, "1")) == cylinder(G, "0"));
  REQUIRE(clopen_subset(G, cylinder(G, "10"), cylinder(G, "1")));
  // constraint equal to the prefix changes nothing
  REQUIRE(c_set(G, "0", "0") == cylinder(G, "0"));
  // after a 1 the continuation is forced to start with 0
  REQUIRE(c_set(G, "1", "") == cylinder(G, "0"));
  Sft O = one_letter();
  REQUIRE(c_fset(O, {"a"}, "a") == whole_space(O));
}

TEST_CASE("canonical form agrees with membership on random clopens") {
  Sft G = golden();
  std::mt19937_64 r = testutil::rng(31);
  auto base = live_words(G, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::string> wa, wb;
    for (const auto& w : base) {
      if (coin(r)) wa.push_back(w);
      if (coin(r)) wb.push_back(w);
    }
    ClopenSet ca = normalize(G, 4, wa), cb = normalize(G, 4, wb);
    std::sort(wa.begin(), wa.end());
    REQUIRE(expand(G, ca, 4).words == wa);
    if (ca == cb) {
      REQUIRE(expand(G, cb, 4).words == wa);
    } else {
      ClopenSet diff = clopen_union(G, clopen_minus(G, ca, cb),
                                    clopen_minus(G, cb, ca));
      REQUIRE_FALSE(diff.empty());
      Pt x = sample_points(G, diff, 1).front();
      REQUIRE(contains_point(G, ca, x) != contains_point(G, cb, x));
    }
  }
}

TEST_CASE("points canonicalize and evaluate") {
  Pt x = make_pt("0", "0");
  REQUIRE(x == make_pt("", "0"));
  REQUIRE(make_pt("", "0101") == make_pt("", "01"));
  REQUIRE(make_pt("011", "01") == make_pt("01", "10"));
  REQUIRE(prefix_of(make_pt("0", "01"), 5) == "00101");
  Sft G = golden();
  REQUIRE(point_in_space(G, make_pt("", "01")));
  REQUIRE_FALSE(point_in_space(G, make_pt("", "1")));
  REQUIRE_FALSE(point_in_space(G, make_pt("01", "1")));
  REQUIRE(shift_left(make_pt("01", "10"), 3) == make_pt("", "01"));
  REQUIRE(prepend("0", make_pt("", "01")) == make_pt("0", "01"));
}

TEST_CASE("prefix maps compose, star, and annihilate") {
  Sft G = golden();
  SxElement s0 = sx_word(G, "0"), s1 = sx_word(G, "1");
  REQUIRE(s0.dom == whole_space(G));
  REQUIRE(s1.dom == cylinder(G, "0"));
  REQUIRE(sx_mul(G, s1, s1).zero);
  REQUIRE_FALSE(sx_mul(G, s0, s0).zero);
  REQUIRE_FALSE(sx_eq(G, s0, s1));
  REQUIRE(sx_eq(G, s0, s0));
  // s_alpha s_beta = s_{alpha beta}
  REQUIRE(sx_eq(G, sx_mul(G, s0, s1), sx_word(G, "01")));
  // star star is the identity and the domain of the star is the image
  REQUIRE(sx_eq(G, sx_star(G, sx_star(G, s0)), s0));
  REQUIRE(sx_star(G, s1).dom == cylinder(G, "1"));
  // s_a* s_a is the idempotent with the letter constraint
  REQUIRE(sx_eq(G, sx_mul(G, sx_star(G, s0), s0), sx_idem(G, {"0"}, "")));
  REQUIRE(sx_eq(G, sx_mul(G, sx_star(G, s1), s1), sx_idem(G, {"1"}, "")));
}

TEST_CASE("functional equality identifies different presentations") {
  Sft O = one_letter();
  SxElement sa = sx_word(O, "a");
  SxElement saa_star = sx_star(O, sx_word(O, "aa"));
  SxElement ea = sx_idem(O, {"a"}, "a");
  REQUIRE(sx_eq(O, sa, saa_star));
  REQUIRE(sx_eq(O, sa, ea));
  REQUIRE(sx_eq(O, saa_star, ea));
  REQUIRE(sx_is_idempotent(O, sa));
  // on the golden-mean shift the analogous pair stays distinct
  Sft G = golden();
  REQUIRE_FALSE(sx_eq(G, sx_word(G, "0"), sx_star(G, sx_word(G, "00"))));
}

TEST_CASE("semigroup laws hold functionally on random triples") {
  std::mt19937_64 r = testutil::rng(77);
  for (const Sft& S : spaces()) {
    auto els = enumerate_elements(S, 2);
    els.push_back(sx_zero());
    std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
    for (int trial = 0; trial < 120; ++trial) {
      const SxElement &x = els[pick(r)], &y = els[pick(r)], &z = els[pick(r)];
      REQUIRE(sx_eq(S, sx_mul(S, sx_mul(S, x, y), z),
                    sx_mul(S, x, sx_mul(S, y, z))));
      REQUIRE(sx_eq(S, sx_star(S, sx_mul(S, x, y)),
                    sx_mul(S, sx_star(S, y), sx_star(S, x))));
      REQUIRE(sx_eq(S, sx_star(S, sx_star(S, x)), x));
      REQUIRE(sx_eq(S, sx_mul(S, sx_mul(S, x, sx_star(S, x)), x), x));
    }
  }
}

TEST_CASE("idempotents factor through the generator words") {
  std::mt19937_64 r = testutil::rng(5);
  for (const Sft& S : spaces()) {
    std::vector<std::string> ws;
    for (int l = 0; l <= 2; ++l)
      for (auto& w : live_words(S, l)) ws.push_back(std::move(w));
    std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::string> F = {ws[pick(r)]};
      if (trial % 2) F.push_back(ws[pick(r)]);
      std::string gamma = ws[pick(r)];
      SxElement lhs = sx_idem(S, F, gamma);
      SxElement prod = sx_word(S, gamma);
      for (const auto& f : F) {
        SxElement sf = sx_word(S, f);
        prod = sx_mul(S, prod, sx_mul(S, sx_star(S, sf), sf));
      }
      prod = sx_mul(S, prod, sx_star(S, sx_word(S, gamma)));
      REQUIRE(sx_eq(S, lhs, prod));
      REQUIRE(sx_is_idempotent(S, lhs));
    }
  }
}

TEST_CASE("fixed points: at most one when the prefixes differ in length") {
  Sft G = golden();
  auto f0 = fixed_points(G, sx_word(G, "0"));
  REQUIRE(f0.points.size() == 1);
  REQUIRE(f0.points[0] == make_pt("", "0"));
  REQUIRE(fixed_points(G, sx_word(G, "1")).points.empty());
  Sft O = one_letter();
  auto fa = fixed_points(O, sx_word(O, "a"));
  REQUIRE(fa.points == std::vector<Pt>{make_pt("", "a")});
  Sft T = two_point();
  auto fab = fixed_points(T, sx_word(T, "ab"));
  REQUIRE(fab.points == std::vector<Pt>{make_pt("", "ab")});
  REQUIRE(fixed_points(T, sx_word(T, "a")).points.empty());
  // equal lengths give the agreement set
  auto fid = fixed_points(G, sx_idem(G, {}, "0"));
  REQUIRE(fid.clopen_form);
  REQUIRE(fid.set == cylinder(G, "0"));
  SxElement move = sx_mul(G, sx_word(G, "0"), sx_star(G, sx_word(G, "1")));
  auto fm = fixed_points(G, move);
  REQUIRE(fm.clopen_form);
  REQUIRE(fm.set.empty());
  // 200 random unequal-length elements never fix two points
  std::mt19937_64 r = testutil::rng(13);
  std::vector<std::string> ws;
  for (int l = 0; l <= 3; ++l)
    for (auto& w : live_words(G, l)) ws.push_back(std::move(w));
  std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
  int seen = 0;
  while (seen < 200) {
    const std::string &a = ws[pick(r)], &b = ws[pick(r)];
    if (a.size() == b.size()) continue;
    SxElement e = sx_make(G, a, b, cylinder(G, b));
    if (e.zero) continue;
    ++seen;
    REQUIRE(fixed_points(G, e).points.size() <= 1);
  }
}

TEST_CASE("points move as the maps dictate") {
  Sft G = golden();
  SxElement s0 = sx_word(G, "0");
  REQUIRE(theta_on_point(G, s0, make_pt("", "01")) == make_pt("0", "01"));
  REQUIRE(theta_on_point(G, sx_star(G, s0), make_pt("", "0")) ==
          make_pt("", "0"));
  REQUIRE_THROWS_AS(theta_on_point(G, sx_star(G, s0), make_pt("1", "0")),
                    Error);
  SxElement ident = sx_idem(G, {}, "");
  REQUIRE(theta_on_point(G, ident, make_pt("1", "0")) == make_pt("1", "0"));
  // the ultrafilter of a point follows the map: pulled-back membership
  // through the semigroup equals membership at the image point
  std::vector<std::pair<std::vector<std::string>, std::string>> tests = {
      {{}, "0"}, {{}, "10"}, {{"0"}, ""}, {{"1"}, "0"}, {{"10"}, "01"}};
  std::vector<Pt> xs = {make_pt("", "0"), make_pt("", "01"), make_pt("1", "0")};
  for (const auto& e : enumerate_elements(G, 2))
    for (const auto& x : xs) {
      if (!contains_point(G, e.dom, x)) continue;
      Pt y = theta_on_point(G, e, x);
      PointUltrafilter xi{y};
      for (const auto& [F, v] : tests) {
        SxElement f = sx_idem(G, F, v);
        SxElement pulled = sx_mul(G, sx_mul(G, sx_star(G, e), f), e);
        bool via_filter = !pulled.zero && contains_point(G, pulled.dom, x);
        REQUIRE(via_filter == xi.contains(G, F, v));
      }
    }
}

TEST_CASE("non-idempotents move a sampled domain point") {
  for (const Sft& S : spaces()) {
    auto rep = siso_sample_check(S, 2);
    REQUIRE(rep.ok);
    REQUIRE(rep.elements == rep.idempotents + rep.moved);
    REQUIRE(rep.elements > 0);
  }
  // on a one-point space everything collapses to idempotents
  auto rep = siso_sample_check(one_letter(), 2);
  REQUIRE(rep.idempotents == rep.elements);
  // the golden-mean shift has honest non-idempotents
  auto grep = siso_sample_check(golden(), 2);
  REQUIRE(grep.moved > 0);
}

TEST_CASE("covers of a domain union back to it") {
  Sft G = golden();
  SxElement ident = sx_idem(G, {}, "");
  SxElement e0 = sx_idem(G, {}, "0"), e10 = sx_idem(G, {}, "10");
  auto rep = cover_domain_union(G, ident, {e0, e10}, 2);
  REQUIRE(rep.cover == Verdict::True);
  REQUIRE(rep.union_matches);
  auto missing = cover_domain_union(G, ident, {e0}, 2);
  REQUIRE(missing.cover == Verdict::False);
  REQUIRE(missing.witness == "10");
  REQUIRE_FALSE(missing.union_matches);
  auto triv = cover_domain_union(G, ident, {ident}, 2);
  REQUIRE(triv.cover == Verdict::True);
  REQUIRE(triv.union_matches);
  REQUIRE_THROWS_AS(cover_domain_union(G, sx_word(G, "0"), {e0}, 2), Error);
  REQUIRE_THROWS_AS(cover_domain_union(G, e0, {ident}, 2), Error);
  // every idempotent splits into its depth-3 cylinders
  for (int l = 0; l <= 2; ++l)
    for (const auto& w : live_words(G, l)) {
      SxElement e = sx_idem(G, {}, w);
      std::vector<SxElement> C;
      for (const auto& u : expand(G, e.dom, 3).words)
        C.push_back(sx_idem(G, {}, u));
      auto r = cover_domain_union(G, e, C, 3);
      REQUIRE(r.cover == Verdict::True);
      REQUIRE(r.union_matches);
    }
}

TEST_CASE("the fixed-point cover witness is computed, not assumed") {
  Sft G = golden();
  SxElement e0 = sx_idem(G, {}, "0");
  auto w_idem = condition_h_witness(G, e0);
  REQUIRE(w_idem.size() == 1);
  REQUIRE(sx_eq(G, w_idem[0], e0));
  // s_0 fixes 0^infty but that singleton is not open: empty cover
  REQUIRE(condition_h_witness(G, sx_word(G, "0")).empty());
  // s_1 fixes nothing at all
  REQUIRE(condition_h_witness(G, sx_word(G, "1")).empty());
  // equal-length movers have no fixed idempotents either
  SxElement move = sx_mul(G, sx_word(G, "0"), sx_star(G, sx_word(G, "1")));
  REQUIRE(condition_h_witness(G, move).empty());
  // one-letter: s_a is already idempotent, so it covers itself
  Sft O = one_letter();
  auto wa = condition_h_witness(O, sx_word(O, "a"));
  REQUIRE(wa.size() == 1);
  REQUIRE(sx_eq(O, wa[0], sx_word(O, "a")));
  // two-point: the point mass at (ab)^infty is open and gets found
  Sft T = two_point();
  SxElement sab = sx_word(T, "ab");
  auto wab = condition_h_witness(T, sab);
  REQUIRE(wab.size() == 1);
  REQUIRE(sx_is_idempotent(T, wab[0]));
  REQUIRE(contains_point(T, wab[0].dom, make_pt("", "ab")));
  REQUIRE(condition_h_witness(T, sx_word(T, "a")).empty());
}

TEST_CASE("finite shifts produce translation matrices") {
  REQUIRE_FALSE(x_is_finite(golden()));
  REQUIRE_THROWS_AS(finite_shift_operators(golden()), Error);
  try {
    finite_shift_operators(golden());
  } catch (const Error& e) {
    REQUIRE(e.kind == ErrKind::NotFinite);
  }

  Sft O = one_letter();
  auto ro = finite_shift_operators(O);
  REQUIRE(ro.points == std::vector<Pt>{make_pt("", "a")});
  REQUIRE(ro.letter_mats.size() == 1);
  REQUIRE(ro.letter_mats[0].rows() == 1);
  REQUIRE(ro.letter_mats[0](0, 0) == std::complex<double>(1.0, 0.0));
  REQUIRE(ro.sum_identity);
  REQUIRE(ro.tight.ok);
  REQUIRE(ro.idem_injective);

  Sft T = two_point();
  auto rt = finite_shift_operators(T);
  REQUIRE(rt.points ==
          std::vector<Pt>{make_pt("", "ab"), make_pt("", "ba")});
  const auto& Sa = rt.letter_mats[0];
  const auto& Sb = rt.letter_mats[1];
  REQUIRE(Sa(0, 1) == std::complex<double>(1.0, 0.0));
  REQUIRE(std::abs(Sa(0, 0)) + std::abs(Sa(1, 0)) + std::abs(Sa(1, 1)) == 0.0);
  REQUIRE(Sb(1, 0) == std::complex<double>(1.0, 0.0));
  REQUIRE(std::abs(Sb(0, 0)) + std::abs(Sb(0, 1)) + std::abs(Sb(1, 1)) == 0.0);
  REQUIRE(rt.sum_identity);
  REQUIRE(rt.tight.ok);
  REQUIRE(rt.idem_injective);
  REQUIRE(rt.idem_rank_abstract == rt.idem_rank_concrete);
}

TEST_CASE("element strings parse back to the same maps") {
  Sft G = golden();
  REQUIRE(sx_eq(G, parse_sx(G, "0"), sx_word(G, "0")));
  REQUIRE(sx_eq(G, parse_sx(G, "1"), sx_word(G, "1")));
  REQUIRE(sx_eq(G, parse_sx(G, "0*"), sx_star(G, sx_word(G, "0"))));
  REQUIRE(sx_eq(G, parse_sx(G, ".|."), sx_idem(G, {}, "")));
  REQUIRE(sx_eq(G, parse_sx(G, "01|0"),
                sx_mul(G, sx_word(G, "01"), sx_star(G, sx_word(G, "0")))));
  REQUIRE(sx_eq(G, parse_sx(G, "1|1"), sx_idem(G, {}, "1")));
  REQUIRE(sx_eq(G, parse_sx(G, "0|0|1@1"),
                sx_mul(G, sx_mul(G, sx_word(G, "0"), sx_idem(G, {"1"}, "1")),
                       sx_star(G, sx_word(G, "0")))));
  REQUIRE(parse_sx(G, "!").zero);
  REQUIRE(parse_sx(G, "0").zero == false);
  REQUIRE(parse_sx(G, "0*").dom == cylinder(G, "0"));
  REQUIRE_THROWS_AS(parse_sx(G, "2"), Error);
  REQUIRE(show_sx(G, sx_zero()) == "!");
  REQUIRE_FALSE(show_sx(G, sx_word(G, "0")).empty());
}
