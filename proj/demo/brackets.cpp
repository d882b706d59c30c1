// Tour of the algebra catalogue: brackets, the covariant realization, and
// the splitting of trivialized central extensions.

#include <qdo/cocycle.hpp>
#include <qdo/covariant.hpp>
#include <qdo/text.hpp>

#include <iostream>

using namespace qdo;

int main() {
  const AlgebraSpec& VQ = algebra("vq");
  const AlgebraSpec& A = algebra("A");
  const AlgebraSpec& T = algebra("tilde-A");

  std::cout << "[E[1,0], E[0,1]]      = " << elem_str(bracket(VQ, E(1, 0), E(0, 1))) << "\n";
  std::cout << "[E[1,2], E[-1,-2]]    = " << elem_str(bracket(VQ, E(1, 2), E(-1, -2)))
            << "\n";
  std::cout << "[G[1,2], G[0,1]]      = " << elem_str(bracket(A, G(1, 2), G(0, 1))) << "\n";

  LieElem x = basis(loop(GKey{1, 0}, 2));
  LieElem y = basis(loop(GKey{-1, 0}, -3));
  std::cout << "[(G[1,0])@t^2, (G[-1,0])@t^-3] = " << elem_str(bracket(T, x, y)) << "\n";

  // the covariant quotient presents vq: theta intertwines the brackets
  LieElem u = E(2, -1), v = E(-2, 3);
  std::cout << "\ntheta([u,v])          = " << elem_str(vq_to_covariant(bracket(VQ, u, v)))
            << "\n";
  std::cout << "[theta u, theta v]    = "
            << elem_str(covariant_bracket(vq_to_covariant(u), vq_to_covariant(v))) << "\n";
  std::cout << "defining sum          = "
            << elem_str(covariant_bracket_sum(vq_to_covariant(u), vq_to_covariant(v)))
            << "\n";

  // the cocycle on A is trivial: psi = mu([.,.]), and f splits A-star
  Cocycle psi = cocycle_of("A");
  TrivializingMap mu = mu_A();
  std::cout << "\npsi(G[2,3], G[-2,3])  = " << psi(G(2, 3), G(-2, 3)).str() << "\n";
  std::cout << "mu([G[2,3], G[-2,3]]) = " << mu(bracket(A, G(2, 3), G(-2, 3))).str() << "\n";
  std::cout << "f(G[0,4])             = " << elem_str(extension_iso(mu, G(0, 4))) << "\n";
  return 0;
}
