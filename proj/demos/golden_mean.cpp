// Tours the golden mean shift: clopen calculus, partial shift maps and their
// fixed points, a cover check, and the finite operator model of a small cousin.

#include <iostream>

#include "tgt/subshift.hpp"

int main() {
  namespace X = tgt::shift;
  auto G = X::Sft::make("01", {"11"});

  std::cout << "golden mean shift, live words by length:";
  for (int len = 1; len <= 6; ++len)
    std::cout << ' ' << X::live_words(G, len).size();
  std::cout << "\n";

  // the cylinder of 0 splits into its one-letter extensions
  auto e = X::sx_idem(G, {}, "0");
  std::vector<X::SxElement> parts;
  for (const auto& w : X::live_words(G, 2))
    if (w[0] == '0') parts.push_back(X::sx_idem(G, {}, w));
  auto rep = X::cover_domain_union(G, e, parts, 6);
  std::cout << "Z(0) covered by its extensions: "
            << X::verdict_name(rep.cover)
            << (rep.union_matches ? " (unions agree)\n" : "\n");

  // s prepends 01 to every point; its unique fixed point is the 01 cycle
  auto s = X::sx_make(G, "01", "", X::whole_space(G));
  std::cout << "element " << X::show_sx(G, s) << "\n";
  auto x = X::make_pt("", "0");
  auto y = X::theta_on_point(G, s, x);
  std::cout << "  sends " << x.pre << "(" << x.per << ") to " << y.pre << "("
            << y.per << ")\n";
  auto fx = X::fixed_points(G, s);
  std::cout << "  fixed points: " << fx.points.size();
  for (const auto& p : fx.points) std::cout << ' ' << p.pre << "(" << p.per << ")";
  std::cout << "\n";

  // the two-cycle shift is finite, so its operators fit in 2x2 matrices
  auto T = X::Sft::make("ab", {"aa", "bb"});
  auto ops = X::finite_shift_operators(T);
  std::cout << "\ntwo-cycle shift: " << ops.points.size() << " points, sum "
            << (ops.sum_identity ? "==" : "!=") << " identity, tight family "
            << (ops.tight.ok ? "verified" : ops.tight.what) << ", idempotents "
            << (ops.idem_injective ? "faithfully" : "NOT faithfully")
            << " represented\n";
  return 0;
}
