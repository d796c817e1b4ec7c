// One qubit versus one classical bit about two uniform bits.

#include <cstdio>

#include "qmem/qmem.hpp"

int main() {
  using namespace qmem;

  const FunctionFamily balanced = FunctionFamily::uniform_balanced(4);
  const StateFamily tetra = tetrahedron_family();
  const double quantum = family_distance(tetra, balanced).value;
  const double schur = mainschur_bound(tetra, balanced);

  const FunctionTable and_storage(2, {0, 0, 0, 1});
  const double classical = classical_storage_distance(Distribution::uniform(4), and_storage, balanced).value;

  std::printf("qubit:     d = %.9f  bound = %.9f  P_guess = %.6f\n", quantum, schur, 0.5 + quantum);
  std::printf("classical: d = %.9f                    P_guess = %.6f\n", classical, 0.5 + classical);
}
