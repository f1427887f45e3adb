#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qwedge/linalg.hpp"
#include "qwedge/states.hpp"
#include "qwedge/tolerances.hpp"

namespace qwedge {

/// Orthonormal basis of the two-fermion space H_d ^ H_d:
///   |g_k> = (|i>|j> - |j>|i>) / sqrt(2)  for the k-th pair (i, j), i < j,
/// with pairs in lexicographic order. Indices are 0-based; for d = 3 the
/// pairs are (0,1), (0,2), (1,2).
class WedgeBasis {
 public:
  /// Throws DimensionTooSmall for d < 2.
  explicit WedgeBasis(std::size_t d);

  std::size_t d() const noexcept { return d_; }
  /// Number of wedge vectors, d(d-1)/2.
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept {
    return pairs_;
  }

  /// Flat product-basis index of |i>|j>: i*d + j.
  std::size_t product_index(std::size_t i, std::size_t j) const noexcept { return i * d_ + j; }

  /// |g_k> expanded in the d^2-dimensional product basis.
  std::vector<Complex> vector(std::size_t k) const;

 private:
  std::size_t d_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

WedgeBasis wedge_basis(std::size_t d);

/// Number of wedge pairs for single-fermion dimension d.
constexpr std::size_t wedge_dimension(std::size_t d) noexcept { return d * (d - 1) / 2; }

/// A d^2 x d^2 density matrix supported on the antisymmetric subspace.
class TwoFermionState {
 public:
  /// Throws DimensionMismatch if rho is not d^2-dimensional and
  /// NotAntisymmetric if (I + SWAP)/2 * rho exceeds tol.antisymmetric anywhere.
  TwoFermionState(DensityMatrix rho, std::size_t d, const Tolerances& tol = kDefaultTolerances);

  std::size_t d() const noexcept { return d_; }
  const DensityMatrix& rho() const noexcept { return rho_; }
  const ComplexMatrix& matrix() const noexcept { return rho_.matrix(); }

 private:
  DensityMatrix rho_;
  std::size_t d_;
};

/// rho' = sum_kl (rho_I)_kl |g_k><g_l|, accumulated entry by entry from the
/// wedge pairs. Throws DimensionMismatch unless rho_I has dimension d(d-1)/2.
TwoFermionState embed(const DensityMatrix& rho_in, std::size_t d,
                      const Tolerances& tol = kDefaultTolerances);

/// <g_k| m |g_l> for every pair of wedge vectors; no validation.
ComplexMatrix wedge_matrix_elements(const ComplexMatrix& m, const WedgeBasis& basis);

/// Inverse of embed: (rho_O)_kl = <g_k| rho' |g_l>.
DensityMatrix extract(const TwoFermionState& state, const Tolerances& tol = kDefaultTolerances);

/// Validates antisymmetric support first (NotAntisymmetric), then extracts.
DensityMatrix extract(const DensityMatrix& rho_prime, std::size_t d,
                      const Tolerances& tol = kDefaultTolerances);

/// Single-fermion marginal of embed(rho_in, d). Both marginals coincide; this
/// returns the one obtained by tracing out the second fermion.
DensityMatrix reduced_fermion_state(const DensityMatrix& rho_in, std::size_t d,
                                    const Tolerances& tol = kDefaultTolerances);

/// max entry of |(I + SWAP)/2 * m|; zero exactly on antisymmetric support.
double symmetric_component(const ComplexMatrix& m, std::size_t d);

}  // namespace qwedge
