#pragma once

#include "h2c/algebra.hpp"

namespace h2c {

// Eigenspace splitting of multiplication by an idempotent e:
// J = J1 + J1/2 + J0 with R_e acting as 1, 1/2, 0.
struct PeirceDecomposition {
  Element e;
  Subspace one, half, zero;
};

bool is_idempotent(const Algebra& a, const Element& e);

// Kernels of (R_e - lambda I) for lambda in {1, 1/2, 0}. Throws
// not_idempotent, or not_jordan when the three kernels do not fill the
// algebra (corrupt input; impossible for genuine Jordan algebras).
PeirceDecomposition peirce_decompose(const Algebra& a, const Element& e);

}  // namespace h2c
