#include "kummerlab/wehler_action.hpp"

namespace kummerlab {

WehlerAction wehler_cohomology_action() {
  WehlerAction a;
  a.lattice = QuadraticLattice(IntMatrix{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
  for (int i = 0; i < 3; ++i) {
    IntMatrix m = IntMatrix::identity(3);
    for (int r = 0; r < 3; ++r) m(r, i) = (r == i) ? -1 : 2;
    (i == 0 ? a.m1 : i == 1 ? a.m2 : a.m3) = m;
  }
  return a;
}

IntMatrix wehler_product(const WehlerAction& a) { return a.m1 * a.m2 * a.m3; }

IntMatrix zeta5_multiplication() {
  // z^4 = -1 - z - z^2 - z^3; column j holds (1+z) z^j.
  return IntMatrix{{1, 0, 0, -1}, {1, 1, 0, -1}, {0, 1, 1, -1}, {0, 0, 1, 0}};
}

IntMatrix zeta5_h2_action() { return exterior_square(zeta5_multiplication()); }

}  // namespace kummerlab
