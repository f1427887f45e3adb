#pragma once

#include <array>
#include <span>
#include <vector>

#include "qwedge/reductions.hpp"
#include "qwedge/states.hpp"
#include "qwedge/tolerances.hpp"

namespace qwedge {

struct MonotoneReport {
  double negativity = 0.0;             // (||rho^PT||_1 - 1) / 2
  double log_negativity = 0.0;         // ln ||rho^PT||_1
  std::vector<double> neg_eigenvalues; // eigenvalues of rho^PT below zero, ascending
  bool entangled = false;              // negativity > Tolerances::entangled
};

/// Negativity of `rho` under the partial transpose of subsystem B.
MonotoneReport negativity(const DensityMatrix& rho, BipartiteShape shape,
                          const Tolerances& tol = kDefaultTolerances);

/// Negativity of the two-fermion embedding of a d(d-1)/2-dimensional state.
MonotoneReport embedded_negativity(const DensityMatrix& rho_in, std::size_t d,
                                   const Tolerances& tol = kDefaultTolerances);

/// -sum lambda ln lambda over the spectrum, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// Entropy of the A-marginal of a pure bipartite state. Throws NotPure when
/// Tr rho^2 < 1 - tol.purity.
double entanglement_entropy(const DensityMatrix& rho, BipartiteShape shape,
                            const Tolerances& tol = kDefaultTolerances);

/// Closed-form analysis of the partial transpose of embed(diag(p1,p2,p3), 3).
///
/// That 9x9 matrix is (1/2) times a direct sum of diag(p1,p2,p1,p3,p2,p3) and
/// the real symmetric block [[0,-p1,-p2],[-p1,0,-p3],[-p2,-p3,0]] living on
/// the |11>,|22>,|33> coordinates. The block's characteristic polynomial is
///   lambda^3 - (p1^2+p2^2+p3^2) lambda + 2 p1 p2 p3,
/// so the only candidates for negative PT eigenvalues are its roots, halved.
struct CubicAnalysis {
  std::array<double, 4> coefficients{};  // (1, 0, -(sum p^2), 2 p1 p2 p3), highest power first
  std::array<double, 3> roots{};         // ascending
  double negativity = 0.0;               // |most negative root| / 2, or 0 if none

  /// Number of roots strictly below -threshold.
  int negative_root_count(double threshold) const;
  /// Largest |cubic(root)| over the three roots.
  double max_residual() const;
};

/// Throws InvalidDistribution unless p has exactly three entries.
CubicAnalysis diagonal_cubic_analysis(const DiagonalDistribution& p);

/// Real roots of t^3 + a t + b = 0 when all three are real (a <= 0 and
/// 4a^3 + 27b^2 <= 0), ascending. Trigonometric form plus one Newton step.
std::array<double, 3> depressed_cubic_roots(double a, double b);

/// True iff E(sum w_i rho_i) <= sum w_i E(rho_i) + slack. Throws ShapeMismatch
/// on ragged input or when the weight count differs from the state count.
bool convexity_check(std::span<const DensityMatrix> states, const DiagonalDistribution& weights,
                     BipartiteShape shape, double slack = 1e-9,
                     const Tolerances& tol = kDefaultTolerances);

}  // namespace qwedge
