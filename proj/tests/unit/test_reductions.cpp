#include <gtest/gtest.h>

#include <cmath>

#include "qwedge/error.hpp"
#include "qwedge/fermion_map.hpp"
#include "qwedge/reductions.hpp"
#include "qwedge/states.hpp"
#include "qwedge_app/reference.hpp"

using namespace qwedge;

namespace {

constexpr BipartiteShape kQutritPair{3, 3};

DensityMatrix bell_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return density_from_pure(PureState({h, 0.0, 0.0, h}));
}

DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b) {
  return density_from_matrix(tensor_product(a.matrix(), b.matrix()));
}

}  // namespace

TEST(PartialTrace, ProductStateFactorizes) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix a = random_mixed(3, seed);
    const DensityMatrix b = random_mixed(2, seed + 50);
    const DensityMatrix ab = product(a, b);
    EXPECT_LE(max_abs_diff(partial_trace(ab, {3, 2}, Subsystem::A).matrix(), a.matrix()), 1e-12);
    EXPECT_LE(max_abs_diff(partial_trace(ab, {3, 2}, Subsystem::B).matrix(), b.matrix()), 1e-12);
  }
}

TEST(PartialTrace, BellMarginalsAreMaximallyMixed) {
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  EXPECT_LE(max_abs_diff(partial_trace(bell_state(), {2, 2}, Subsystem::A).matrix(), half), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(bell_state(), {2, 2}, Subsystem::B).matrix(), half), 1e-15);
}

TEST(PartialTrace, FermionMarginalMatchesClosedForm) {
  const DensityMatrix rho = random_mixed(3, 404);
  const ComplexMatrix expected = reference::qutrit_marginal_template(rho.matrix());
  const auto two = embed(rho, 3);
  EXPECT_LE(max_abs_diff(partial_trace(two.matrix(), kQutritPair, Subsystem::B), expected), 1e-12);
  EXPECT_LE(max_abs_diff(partial_trace(two.matrix(), kQutritPair, Subsystem::A), expected), 1e-12);
}

TEST(PartialTrace, BlockRecipeMatchesIndexSum) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BipartiteShape shape{1 + seed % 4, 1 + (seed / 4) % 4};
    const DensityMatrix rho = random_mixed(shape.total(), seed);
    for (const Subsystem keep : {Subsystem::A, Subsystem::B}) {
      EXPECT_LE(max_abs_diff(partial_trace(rho.matrix(), shape, keep),
                             reference::partial_trace_index_sum(rho.matrix(), shape, keep)),
                1e-14);
    }
  }
}

TEST(PartialTrace, PreservesTrace) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_mixed(6, seed);
    EXPECT_NEAR(partial_trace(rho, {2, 3}, Subsystem::A).matrix().trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(partial_trace(rho, {2, 3}, Subsystem::B).matrix().trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialTrace, InvariantUnderUnitaryOnTracedFactor) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_mixed(6, seed);
    const ComplexMatrix local = tensor_product(ComplexMatrix::identity(2), random_unitary(3, seed + 7));
    const ComplexMatrix rotated = local * rho.matrix() * local.adjoint();
    EXPECT_LE(max_abs_diff(partial_trace(rotated, {2, 3}, Subsystem::A),
                           partial_trace(rho.matrix(), {2, 3}, Subsystem::A)),
              1e-10);
  }
}

TEST(PartialTrace, ShapeMismatch) {
  try {
    partial_trace(random_mixed(6, 1), {2, 2}, Subsystem::A);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(PartialTranspose, DiagonalQutritEmbeddingMatchesTemplate) {
  const double p1 = 0.5, p2 = 0.3, p3 = 0.2;
  const auto two = embed(density_from_diagonal(DiagonalDistribution({p1, p2, p3})), 3);
  EXPECT_LE(max_abs_diff(partial_transpose(two.rho(), kQutritPair, Subsystem::B),
                         reference::diagonal_partial_transpose_template(p1, p2, p3)),
            1e-15);
}

TEST(PartialTranspose, GeneralQutritEmbeddingMatchesTemplate) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = random_mixed(3, seed);
    EXPECT_LE(max_abs_diff(partial_transpose(embed(rho, 3).rho(), kQutritPair, Subsystem::B),
                           reference::qutrit_partial_transpose_template(rho.matrix())),
              1e-15);
  }
}

TEST(PartialTranspose, ProductStateTransposesSecondFactor) {
  const DensityMatrix a = random_mixed(3, 1);
  const DensityMatrix b = random_mixed(3, 2);
  const ComplexMatrix pt = partial_transpose(product(a, b), kQutritPair, Subsystem::B);
  EXPECT_LE(max_abs_diff(pt, tensor_product(a.matrix(), b.matrix().transpose())), 1e-15);
  EXPECT_GE(hermitian_eigenvalues(pt).back(), -1e-9);

  const ComplexMatrix pta = partial_transpose(product(a, b), kQutritPair, Subsystem::A);
  EXPECT_LE(max_abs_diff(pta, tensor_product(a.matrix().transpose(), b.matrix())), 1e-15);
}

TEST(PartialTranspose, InvolutionTraceAndHermiticity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BipartiteShape shape{2 + seed % 3, 2 + (seed / 3) % 3};
    const DensityMatrix rho = random_mixed(shape.total(), seed);
    for (const Subsystem which : {Subsystem::A, Subsystem::B}) {
      const ComplexMatrix once = partial_transpose(rho, shape, which);
      EXPECT_EQ(partial_transpose(once, shape, which), rho.matrix());
      EXPECT_NEAR(once.trace().real(), 1.0, 1e-12);
      EXPECT_TRUE(is_hermitian(once, 1e-12));
    }
  }
}

TEST(PartialTranspose, SeparableMixturesStayPositive) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<DensityMatrix> terms;
    for (std::uint64_t k = 0; k < 4; ++k) {
      terms.push_back(product(random_mixed(3, 10 * seed + k), random_mixed(2, 10 * seed + k + 5)));
    }
    const DensityMatrix mix = mixture(terms, DiagonalDistribution({0.1, 0.2, 0.3, 0.4}));
    EXPECT_GE(hermitian_eigenvalues(partial_transpose(mix, {3, 2}, Subsystem::B)).back(), -1e-9);
  }
}

TEST(PartialTranspose, BellStateIsNotPpt) {
  const auto spectrum = hermitian_eigenvalues(partial_transpose(bell_state(), {2, 2}, Subsystem::B));
  EXPECT_NEAR(spectrum.back(), -0.5, 1e-15);
}

TEST(SwapOperator, ExchangesFactors) {
  const ComplexMatrix a = random_mixed(3, 5).matrix();
  const ComplexMatrix b = random_mixed(3, 6).matrix();
  const ComplexMatrix s = swap_operator(3);
  EXPECT_LE(max_abs_diff(s * tensor_product(a, b) * s, tensor_product(b, a)), 1e-15);
}
