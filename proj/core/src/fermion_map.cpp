#include "qwedge/fermion_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwedge/error.hpp"
#include "qwedge/reductions.hpp"

namespace qwedge {

WedgeBasis::WedgeBasis(std::size_t d) : d_(d) {
  if (d < 2) {
    throw Error(ErrorKind::DimensionTooSmall,
                "two fermions need single-particle dimension >= 2, got " + std::to_string(d));
  }
  pairs_.reserve(wedge_dimension(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs_.emplace_back(i, j);
}

std::vector<Complex> WedgeBasis::vector(std::size_t k) const {
  std::vector<Complex> v(d_ * d_);
  const auto [i, j] = pairs_.at(k);
  v[product_index(i, j)] = std::numbers::sqrt2 / 2.0;
  v[product_index(j, i)] = -std::numbers::sqrt2 / 2.0;
  return v;
}

WedgeBasis wedge_basis(std::size_t d) { return WedgeBasis(d); }

double symmetric_component(const ComplexMatrix& m, std::size_t d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t col = 0; col < m.dim(); ++col) {
        const Complex sym = 0.5 * (m(i * d + j, col) + m(j * d + i, col));
        worst = std::max(worst, std::abs(sym));
      }
  return worst;
}

TwoFermionState::TwoFermionState(DensityMatrix rho, std::size_t d, const Tolerances& tol)
    : rho_(std::move(rho)), d_(d) {
  if (rho_.dim() != d * d) {
    throw Error(ErrorKind::DimensionMismatch, "two-fermion state for d=" + std::to_string(d) +
                                                  " must have dimension " +
                                                  std::to_string(d * d) + ", got " +
                                                  std::to_string(rho_.dim()));
  }
  const double sym = symmetric_component(rho_.matrix(), d);
  if (!(sym <= tol.antisymmetric)) {
    throw Error(ErrorKind::NotAntisymmetric,
                "symmetric component reaches " + std::to_string(sym));
  }
}

TwoFermionState embed(const DensityMatrix& rho_in, std::size_t d, const Tolerances& tol) {
  const WedgeBasis basis(d);
  if (rho_in.dim() != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "d=" + std::to_string(d) + " embeds states of dimension " +
                    std::to_string(basis.size()) + ", got " + std::to_string(rho_in.dim()));
  }

  // |g_k><g_l| = 1/2 (|ij> - |ji>)(<mn| - <nm|) for g_k ~ (i,j), g_l ~ (m,n).
  ComplexMatrix out(d * d);
  const auto& pairs = basis.pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::size_t ij = basis.product_index(pairs[k].first, pairs[k].second);
    const std::size_t ji = basis.product_index(pairs[k].second, pairs[k].first);
    for (std::size_t l = 0; l < pairs.size(); ++l) {
      const std::size_t mn = basis.product_index(pairs[l].first, pairs[l].second);
      const std::size_t nm = basis.product_index(pairs[l].second, pairs[l].first);
      const Complex half = 0.5 * rho_in(k, l);
      out(ij, mn) += half;
      out(ij, nm) -= half;
      out(ji, mn) -= half;
      out(ji, nm) += half;
    }
  }
  return TwoFermionState(density_from_matrix(std::move(out), tol), d, tol);
}

ComplexMatrix wedge_matrix_elements(const ComplexMatrix& m, const WedgeBasis& basis) {
  const auto& pairs = basis.pairs();
  ComplexMatrix out(basis.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::size_t ij = basis.product_index(pairs[k].first, pairs[k].second);
    const std::size_t ji = basis.product_index(pairs[k].second, pairs[k].first);
    for (std::size_t l = 0; l < pairs.size(); ++l) {
      const std::size_t mn = basis.product_index(pairs[l].first, pairs[l].second);
      const std::size_t nm = basis.product_index(pairs[l].second, pairs[l].first);
      out(k, l) = 0.5 * (m(ij, mn) - m(ij, nm) - m(ji, mn) + m(ji, nm));
    }
  }
  return out;
}

DensityMatrix extract(const TwoFermionState& state, const Tolerances& tol) {
  return density_from_matrix(wedge_matrix_elements(state.matrix(), WedgeBasis(state.d())), tol);
}

DensityMatrix extract(const DensityMatrix& rho_prime, std::size_t d, const Tolerances& tol) {
  return extract(TwoFermionState(rho_prime, d, tol), tol);
}

DensityMatrix reduced_fermion_state(const DensityMatrix& rho_in, std::size_t d,
                                    const Tolerances& tol) {
  return partial_trace(embed(rho_in, d, tol).rho(), BipartiteShape{d, d}, Subsystem::A, tol);
}

}  // namespace qwedge
