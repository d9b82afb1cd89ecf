// Walks one finite inverse semigroup from its multiplication table to the
// block decomposition of its groupoid algebra, printing each landmark.

#include <iostream>

#include "tgt/builders.hpp"
#include "tgt/groupoid_algebra.hpp"
#include "tgt/json_io.hpp"

int main() {
  using namespace tgt;
  auto S = builders::brandt2();

  std::cout << "semigroup: " << S.size() << " elements\n";
  std::cout << "idempotents:";
  for (int e : S.idempotents()) std::cout << ' ' << S.elements[e];
  std::cout << "\n\n";

  auto sp = tight_spectrum(S);
  std::cout << "filters on E(S): " << sp.filter_count
            << ", tight: " << sp.tight.size() << "\n";
  for (const auto& xi : sp.tight) {
    std::cout << "  tight filter at " << S.elements[xi.minimum] << " = {";
    for (size_t i = 0; i < xi.members.size(); ++i)
      std::cout << (i ? ", " : " ") << S.elements[xi.members[i]];
    std::cout << " }\n";
  }

  auto G = tight_groupoid(S, sp);
  std::cout << "\ngroupoid of germs: " << G.size() << " arrows, "
            << G.unit_count() << " units, "
            << (G.effective ? "effective" : "not effective") << "\n";

  RegularRep rep(G);
  auto bd = block_decomposition(G, rep);
  std::cout << "algebra dimension " << bd.algebra_dim << ", blocks:";
  for (int d : bd.dims) std::cout << ' ' << d << 'x' << d;
  std::cout << "\n";

  for (int s = 0; s < S.size(); ++s) {
    auto ts = indicator<long long>(G, S, s);
    auto es = expectation(G, ts);
    std::cout << "  E(T_" << S.elements[s] << ") "
              << (is_zero(es) ? "vanishes" : "survives") << "\n";
  }

  std::cout << "\n" << io::groupoid_to_dot(S, sp, G);
  return 0;
}
