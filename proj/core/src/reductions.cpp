#include "qwedge/reductions.hpp"

#include <string>

#include "qwedge/error.hpp"

namespace qwedge {

namespace {

void check_shape(const ComplexMatrix& rho, BipartiteShape shape) {
  if (shape.dimA == 0 || shape.dimB == 0 || shape.total() != rho.dim()) {
    throw Error(ErrorKind::ShapeMismatch,
                "shape " + std::to_string(shape.dimA) + "x" + std::to_string(shape.dimB) +
                    " does not factor a matrix of dimension " + std::to_string(rho.dim()));
  }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteShape shape, Subsystem keep) {
  check_shape(rho, shape);
  const std::size_t na = shape.dimA;
  const std::size_t nb = shape.dimB;

  if (keep == Subsystem::A) {
    ComplexMatrix out(na);
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t l = 0; l < na; ++l) {
        Complex block_trace = 0.0;
        for (std::size_t m = 0; m < nb; ++m) block_trace += rho(k * nb + m, l * nb + m);
        out(k, l) = block_trace;
      }
    return out;
  }

  ComplexMatrix out(nb);
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) out(i, j) += rho(k * nb + i, k * nb + j);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, BipartiteShape shape, Subsystem keep,
                            const Tolerances& tol) {
  return density_from_matrix(partial_trace(rho.matrix(), shape, keep), tol);
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteShape shape, Subsystem which) {
  check_shape(rho, shape);
  const std::size_t na = shape.dimA;
  const std::size_t nb = shape.dimB;
  ComplexMatrix out(rho.dim());
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t i2 = 0; i2 < nb; ++i2)
      for (std::size_t j1 = 0; j1 < na; ++j1)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const std::size_t row = i1 * nb + i2;
          const std::size_t col = j1 * nb + j2;
          out(row, col) = which == Subsystem::B ? rho(i1 * nb + j2, j1 * nb + i2)
                                                : rho(j1 * nb + i2, i1 * nb + j2);
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, BipartiteShape shape, Subsystem which) {
  return partial_transpose(rho.matrix(), shape, which);
}

ComplexMatrix swap_operator(std::size_t d) {
  ComplexMatrix s(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
  return s;
}

}  // namespace qwedge
