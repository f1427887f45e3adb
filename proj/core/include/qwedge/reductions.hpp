#pragma once

#include <cstddef>

#include "qwedge/linalg.hpp"
#include "qwedge/states.hpp"

namespace qwedge {

/// Factor dimensions of H_A (x) H_B. Basis index (a, b) flattens to a*dimB + b.
struct BipartiteShape {
  std::size_t dimA = 0;
  std::size_t dimB = 0;

  std::size_t total() const noexcept { return dimA * dimB; }
};

enum class Subsystem { A, B };

// Partial trace by the block recipe: split rho into dimA x dimA blocks R_kl of
// size dimB. Keeping A gives the matrix of block traces (Tr R_kl); keeping B
// gives the sum of the diagonal blocks R_11 + ... + R_nn.
ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteShape shape, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, BipartiteShape shape, Subsystem keep,
                            const Tolerances& tol = kDefaultTolerances);

// Transpose of one tensor factor. For `which == B`,
// ((i1,i2),(j1,j2)) <- ((i1,j2),(j1,i2)). The result may be indefinite and is
// deliberately returned unvalidated.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteShape shape, Subsystem which);
ComplexMatrix partial_transpose(const DensityMatrix& rho, BipartiteShape shape, Subsystem which);

/// Exchanges the tensor factors of H_d (x) H_d.
ComplexMatrix swap_operator(std::size_t d);

}  // namespace qwedge
