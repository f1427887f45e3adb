#include "qwedge/states.hpp"

#include <cmath>
#include <sstream>

#include "qwedge/error.hpp"
#include "qwedge/random.hpp"

namespace qwedge {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes, const Tolerances& tol)
    : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw Error(ErrorKind::NotNormalized, "pure state has no amplitudes");
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  if (!(std::abs(norm2 - 1.0) <= tol.normalization)) {
    throw Error(ErrorKind::NotNormalized, "sum |a_i|^2 = " + fmt(norm2));
  }
}

DiagonalDistribution::DiagonalDistribution(std::vector<double> probs, const Tolerances& tol)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(ErrorKind::InvalidDistribution, "empty distribution");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(ErrorKind::InvalidDistribution, "entry " + fmt(p) + " is not a probability");
    }
    sum += p;
  }
  if (!(std::abs(sum - 1.0) <= tol.distribution)) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + fmt(sum));
  }
}

DensityMatrix density_from_matrix(ComplexMatrix m, const Tolerances& tol) {
  if (m.dim() == 0) throw Error(ErrorKind::TraceNotOne, "empty matrix has trace 0");
  if (!is_hermitian(m, tol.hermitian)) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian (or has non-finite entries)");
  }
  const Complex tr = m.trace();
  if (!(std::abs(tr.real() - 1.0) <= tol.trace)) {
    throw Error(ErrorKind::TraceNotOne, "trace is " + fmt(tr.real()));
  }
  const double smallest = hermitian_eigenvalues(m, tol).back();
  if (smallest < -tol.psd) {
    throw Error(ErrorKind::NotPositive, "smallest eigenvalue is " + fmt(smallest));
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix density_from_pure(const PureState& psi) {
  return density_from_matrix(ComplexMatrix::outer(psi.amplitudes()));
}

DensityMatrix density_from_diagonal(const DiagonalDistribution& p) {
  return density_from_matrix(ComplexMatrix::diagonal(p.probs()));
}

DensityMatrix mixture(std::span<const DensityMatrix> states, const DiagonalDistribution& weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw Error(ErrorKind::DimensionMismatch, "need one weight per state");
  }
  ComplexMatrix acc(states.front().dim());
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dim() != acc.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "states in a mixture must share a dimension");
    }
    acc += weights[k] * states[k].matrix();
  }
  return density_from_matrix(std::move(acc));
}

PureState random_pure(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (auto& z : v) {
    z = rng.complex_normal();
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return PureState(std::move(v));
}

DensityMatrix random_mixed(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix w = g * g.adjoint();
  // G G^H is Hermitian in exact arithmetic; symmetrize away rounding.
  w = 0.5 * (w + w.adjoint());
  w *= 1.0 / w.trace().real();
  return density_from_matrix(std::move(w));
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix q(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) q(i, j) = rng.complex_normal();

  // Modified Gram-Schmidt over columns, two passes for orthogonality.
  for (std::size_t k = 0; k < dim; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q(i, j)) * q(i, k);
        for (std::size_t i = 0; i < dim; ++i) q(i, k) -= proj * q(i, j);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(q(i, k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) q(i, k) *= inv;
  }
  return q;
}

}  // namespace qwedge
