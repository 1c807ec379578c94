#pragma once

#include "kummerlab/int_matrix.hpp"
#include "kummerlab/lattice.hpp"

namespace kummerlab {

/// Action of the three involutions on the span of the fiber classes
/// h1, h2, h3 of a (2,2,2) surface.
struct WehlerAction {
  IntMatrix m1, m2, m3;
  QuadraticLattice lattice;
};

/// sigma_i^* h_i = -h_i + 2 h_j + 2 h_k, fixing h_j and h_k. Columns are
/// images of basis vectors.
WehlerAction wehler_cohomology_action();

/// M1 M2 M3, the action of sigma_1 o sigma_2 o sigma_3.
IntMatrix wehler_product(const WehlerAction& a);

/// Multiplication by 1 + zeta_5 on Z[zeta_5] in the basis 1, z, z^2, z^3.
IntMatrix zeta5_multiplication();

/// Its induced action on the second exterior power (rank 6); the spectral
/// radius is |1 + zeta_5|^2.
IntMatrix zeta5_h2_action();

}  // namespace kummerlab
