#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qwedge/tolerances.hpp"

namespace qwedge {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol);

/// Kronecker product, first factor major: ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Cyclic complex Jacobi. Throws NotHermitian when `a` fails
/// is_hermitian(a, tol.hermitian) and NoConvergence when the sweep budget
/// runs out.
EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& a,
                                            const Tolerances& tol = kDefaultTolerances);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const Tolerances& tol = kDefaultTolerances);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a, const Tolerances& tol = kDefaultTolerances);

}  // namespace qwedge
