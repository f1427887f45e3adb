#include "qwedge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qwedge/error.hpp"

namespace qwedge {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("ComplexMatrix: rows must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("ComplexMatrix +=: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("ComplexMatrix -=: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ComplexMatrix *: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.dim() != v.size()) throw std::invalid_argument("ComplexMatrix * vector: size mismatch");
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) m = std::max(m, std::abs(ea[k] - eb[k]));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      if (!(std::abs(a(i, j) - std::conj(a(j, i))) <= tol)) return false;
  return true;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const Complex aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < nb; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          out(i1 * nb + i2, j1 * nb + j2) = aij * b(i2, j2);
    }
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with A <- G^H A G, V <- V G, where on the (p,q) plane
//   G = [[c, s e], [-s conj(e), c]],  e = a(p,q)/|a(p,q)|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex e = apq / r;

  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  double t;
  if (tau == 0.0) {
    t = 1.0;
  } else if (std::abs(tau) > 1e150) {
    t = 0.5 / tau;
  } else {
    t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex se = s * e;
  const Complex sec = s * std::conj(e);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - sec * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = sec * apk + c * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - sec * vkq;
    v(k, q) = se * vkp + c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol.hermitian)) {
    throw Error(ErrorKind::NotHermitian, "eigendecomposition requires a Hermitian matrix");
  }
  const std::size_t n = a.dim();

  // Work on the exact Hermitian part so sub-tolerance asymmetry cannot leak in.
  ComplexMatrix work = 0.5 * (a + a.adjoint());
  ComplexMatrix vecs = ComplexMatrix::identity(n);
  const double threshold = tol.jacobi_relative * work.frobenius_norm();

  int sweeps = 0;
  while (off_diagonal_norm(work) > threshold) {
    if (sweeps == tol.jacobi_max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(work, vecs, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() > work(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vecs(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const Tolerances& tol) {
  return hermitian_eigendecompose(a, tol).eigenvalues;
}

double trace_norm(const ComplexMatrix& a, const Tolerances& tol) {
  double s = 0.0;
  for (double l : hermitian_eigenvalues(a, tol)) s += std::abs(l);
  return s;
}

}  // namespace qwedge
