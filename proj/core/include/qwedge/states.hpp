#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qwedge/linalg.hpp"
#include "qwedge/tolerances.hpp"

namespace qwedge {

/// Hermitian, unit-trace, positive-semidefinite matrix (all up to the
/// configured tolerances). Only obtainable through density_from_matrix and
/// the constructors built on it; the stored matrix is never repaired.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return mat_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  friend DensityMatrix density_from_matrix(ComplexMatrix, const Tolerances&);

  ComplexMatrix mat_;
};

/// Normalized state vector.
class PureState {
 public:
  /// Throws NotNormalized if |sum |a_i|^2 - 1| > tol.normalization or the
  /// vector is empty.
  explicit PureState(std::vector<Complex> amplitudes,
                     const Tolerances& tol = kDefaultTolerances);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

 private:
  std::vector<Complex> amps_;
};

/// Probability vector.
class DiagonalDistribution {
 public:
  /// Throws InvalidDistribution on empty input, a negative entry, or a sum
  /// further than tol.distribution from 1.
  explicit DiagonalDistribution(std::vector<double> probs,
                                const Tolerances& tol = kDefaultTolerances);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// Validation gate for states. Errors: NotHermitian, TraceNotOne, NotPositive.
DensityMatrix density_from_matrix(ComplexMatrix m, const Tolerances& tol = kDefaultTolerances);

DensityMatrix density_from_pure(const PureState& psi);
DensityMatrix density_from_diagonal(const DiagonalDistribution& p);

/// Sum_i w_i rho_i. Throws DimensionMismatch on ragged input.
DensityMatrix mixture(std::span<const DensityMatrix> states, const DiagonalDistribution& weights);

/// Haar-random pure state: normalized complex Gaussian vector.
PureState random_pure(std::size_t dim, std::uint64_t seed);

/// Ginibre-induced mixed state G G^H / Tr(G G^H).
DensityMatrix random_mixed(std::size_t dim, std::uint64_t seed);

/// Haar unitary: Gram-Schmidt QR of a Ginibre matrix, so R has a positive
/// real diagonal and Q needs no further phase correction.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace qwedge
