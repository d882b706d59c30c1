// Induced modules in action: straightening, annihilation bounds, and the
// support containment behind the simplicity of induced modules.

#include <qdo/pbw.hpp>
#include <qdo/stateio.hpp>

#include <iostream>

using namespace qdo;

int main() {
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));
  PBWState v = PBWState::bottom_vector();

  PBWState w = parse_state(S, "E[2,-1] E[1,-2] v");
  std::cout << "E[2,-1] E[1,-2] v normalizes to\n    " << state_str(S, w) << "\n";

  std::cout << "E[1,2] (E[-1,-2] v) = "
            << state_str(S, act(S, E(1, 2), act(S, E(-1, -2), v))) << "\n";

  std::vector<long> ks = {-3, -1, 0, 1, 3};
  std::cout << "annihilation bound for that state: t = " << restrictedness_bound(S, w, ks)
            << "\n";

  // symbolic bottom: E_{k',t+j} E_{k1,-j1}^{i1} v collapses to a single line
  SupportReport at = check_support_lemma(1, 0, 1, 1, 2, 2);
  std::cout << "\nE[0,3] E[1,-1]^2 v over a cutoff-1 abstract bottom = ("
            << at.scalar.str() << ") * E[2,1] v\n";
  SupportReport above = check_support_lemma(1, 0, 1, 1, 2, 3);
  std::cout << "E[0,4] E[1,-1]^2 v vanishes: " << (above.vanished ? "yes" : "no") << "\n";

  // vacuum module over tilde-A
  InductionSpec V = make_vacuum("tilde-A", QLaurent(1), QLaurent(1));
  PBWState vac = PBWState::bottom_vector();
  PBWState s = act(V, basis(loop(GKey{1, 0}, 0)), act(V, basis(loop(GKey{-1, 0}, -1)), vac));
  std::cout << "\n(G[1,0])@t^0 (G[-1,0])@t^-1 vac = " << state_str(V, s) << "\n";
  return 0;
}
