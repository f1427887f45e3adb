#pragma once

// Independent second routes for the quantities the library computes. Nothing
// here calls into fermion_map, reductions or the cubic solver; the verifier
// and the tests compare the library against these.

#include <array>
#include <span>

#include "qwedge/linalg.hpp"
#include "qwedge/reductions.hpp"

namespace qwedge::reference {

/// Partial trace as a literal sum of <i1 j| rho |i2 j> over product-basis kets.
ComplexMatrix partial_trace_index_sum(const ComplexMatrix& rho, BipartiteShape shape,
                                      Subsystem keep);

/// rho' = W rho W^H with W the d^2 x N isometry whose columns are the wedge
/// vectors (|i>|j> - |j>|i>)/sqrt(2), i < j lexicographic.
ComplexMatrix embed_by_isometry(const ComplexMatrix& rho_in, std::size_t d);

// Symbolic d = 3 matrices, written out entry by entry in terms of the qutrit
// density matrix r (0-based) or the amplitudes a.

/// 9x9 two-fermion state.
ComplexMatrix qutrit_embedding_template(const ComplexMatrix& r);
/// 3x3 single-fermion marginal.
ComplexMatrix qutrit_marginal_template(const ComplexMatrix& r);
/// 3x3 single-fermion marginal of a pure qutrit state.
ComplexMatrix qutrit_pure_marginal_template(std::span<const Complex> a);
/// 9x9 partial transpose (second factor) of the two-fermion state.
ComplexMatrix qutrit_partial_transpose_template(const ComplexMatrix& r);
/// 9x9 partial transpose for a diagonal qutrit state diag(p1, p2, p3).
ComplexMatrix diagonal_partial_transpose_template(double p1, double p2, double p3);

/// Roots of t^3 + a t + b (three real roots assumed), ascending, found by
/// bisection between the critical points.
std::array<double, 3> depressed_cubic_roots_bisection(double a, double b);

}  // namespace qwedge::reference
