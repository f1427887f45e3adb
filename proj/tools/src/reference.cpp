#include "qwedge_app/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qwedge::reference {

namespace {

std::vector<Complex> ket(std::size_t dim, std::size_t index) {
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return v;
}

Complex sandwich(std::span<const Complex> bra, const ComplexMatrix& m,
                 std::span<const Complex> k) {
  const std::vector<Complex> mk = m * k;
  Complex s = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) s += std::conj(bra[i]) * mk[i];
  return s;
}

// |a>|b> for product-basis kets of H_A (x) H_B.
std::vector<Complex> product_ket(BipartiteShape shape, std::size_t a, std::size_t b) {
  const auto ka = ket(shape.dimA, a);
  const auto kb = ket(shape.dimB, b);
  std::vector<Complex> out(shape.total());
  for (std::size_t i = 0; i < shape.dimA; ++i)
    for (std::size_t j = 0; j < shape.dimB; ++j) out[i * shape.dimB + j] = ka[i] * kb[j];
  return out;
}

}  // namespace

ComplexMatrix partial_trace_index_sum(const ComplexMatrix& rho, BipartiteShape shape,
                                      Subsystem keep) {
  if (shape.total() != rho.dim()) throw std::invalid_argument("shape mismatch");
  const std::size_t kept = keep == Subsystem::A ? shape.dimA : shape.dimB;
  const std::size_t traced = keep == Subsystem::A ? shape.dimB : shape.dimA;
  ComplexMatrix out(kept);
  for (std::size_t i1 = 0; i1 < kept; ++i1)
    for (std::size_t i2 = 0; i2 < kept; ++i2)
      for (std::size_t j = 0; j < traced; ++j) {
        const auto bra = keep == Subsystem::A ? product_ket(shape, i1, j) : product_ket(shape, j, i1);
        const auto k = keep == Subsystem::A ? product_ket(shape, i2, j) : product_ket(shape, j, i2);
        out(i1, i2) += sandwich(bra, rho, k);
      }
  return out;
}

ComplexMatrix embed_by_isometry(const ComplexMatrix& rho_in, std::size_t d) {
  // Columns of W, in lexicographic pair order.
  std::vector<std::vector<Complex>> columns;
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Complex> col(d * d);
      col[i * d + j] = h;
      col[j * d + i] = -h;
      columns.push_back(std::move(col));
    }
  if (columns.size() != rho_in.dim()) throw std::invalid_argument("dimension mismatch");

  const std::size_t big = d * d;
  const std::size_t n = columns.size();
  // T = W rho  (big x n), then out = T W^H.
  std::vector<Complex> t(big * n);
  for (std::size_t r = 0; r < big; ++r)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) t[r * n + l] += columns[k][r] * rho_in(k, l);
  ComplexMatrix out(big);
  for (std::size_t r = 0; r < big; ++r)
    for (std::size_t c = 0; c < big; ++c)
      for (std::size_t l = 0; l < n; ++l) out(r, c) += t[r * n + l] * std::conj(columns[l][c]);
  return out;
}

ComplexMatrix qutrit_embedding_template(const ComplexMatrix& r) {
  const Complex z = 0.0;
  const auto p = [&](int i, int j) { return r(i - 1, j - 1); };
  const auto m = [&](int i, int j) { return -r(i - 1, j - 1); };
  ComplexMatrix t{
      {z, z, z, z, z, z, z, z, z},
      {z, p(1, 1), p(1, 2), m(1, 1), z, p(1, 3), m(1, 2), m(1, 3), z},
      {z, p(2, 1), p(2, 2), m(2, 1), z, p(2, 3), m(2, 2), m(2, 3), z},
      {z, m(1, 1), m(1, 2), p(1, 1), z, m(1, 3), p(1, 2), p(1, 3), z},
      {z, z, z, z, z, z, z, z, z},
      {z, p(3, 1), p(3, 2), m(3, 1), z, p(3, 3), m(3, 2), m(3, 3), z},
      {z, m(2, 1), m(2, 2), p(2, 1), z, m(2, 3), p(2, 2), p(2, 3), z},
      {z, m(3, 1), m(3, 2), p(3, 1), z, m(3, 3), p(3, 2), p(3, 3), z},
      {z, z, z, z, z, z, z, z, z},
  };
  return 0.5 * t;
}

ComplexMatrix qutrit_marginal_template(const ComplexMatrix& r) {
  const auto p = [&](int i, int j) { return r(i - 1, j - 1); };
  ComplexMatrix t{
      {p(1, 1) + p(2, 2), p(2, 3), -p(1, 3)},
      {p(3, 2), p(1, 1) + p(3, 3), p(1, 2)},
      {-p(3, 1), p(2, 1), p(2, 2) + p(3, 3)},
  };
  return 0.5 * t;
}

ComplexMatrix qutrit_pure_marginal_template(std::span<const Complex> a) {
  if (a.size() != 3) throw std::invalid_argument("qutrit amplitudes expected");
  const auto n2 = [&](int i) { return std::norm(a[i - 1]); };
  const auto x = [&](int i) { return a[i - 1]; };
  const auto c = [&](int i) { return std::conj(a[i - 1]); };
  ComplexMatrix t{
      {n2(1) + n2(2), x(2) * c(3), -x(1) * c(3)},
      {c(2) * x(3), n2(1) + n2(3), x(1) * c(2)},
      {-c(1) * x(3), c(1) * x(2), n2(2) + n2(3)},
  };
  return 0.5 * t;
}

ComplexMatrix qutrit_partial_transpose_template(const ComplexMatrix& r) {
  const Complex z = 0.0;
  const auto p = [&](int i, int j) { return r(i - 1, j - 1); };
  const auto m = [&](int i, int j) { return -r(i - 1, j - 1); };
  ComplexMatrix t{
      {z, z, z, z, m(1, 1), m(2, 1), z, m(1, 2), m(2, 2)},
      {z, p(1, 1), p(2, 1), z, z, z, z, m(1, 3), m(2, 3)},
      {z, p(1, 2), p(2, 2), z, p(1, 3), p(2, 3), z, z, z},
      {z, z, z, p(1, 1), z, m(3, 1), p(1, 2), z, m(3, 2)},
      {m(1, 1), z, p(3, 1), z, z, z, p(1, 3), z, m(3, 3)},
      {m(1, 2), z, p(3, 2), m(1, 3), z, p(3, 3), z, z, z},
      {z, z, z, p(2, 1), p(3, 1), z, p(2, 2), p(3, 2), z},
      {m(2, 1), m(3, 1), z, z, z, z, p(2, 3), p(3, 3), z},
      {m(2, 2), m(3, 2), z, m(2, 3), m(3, 3), z, z, z, z},
  };
  return 0.5 * t;
}

ComplexMatrix diagonal_partial_transpose_template(double p1, double p2, double p3) {
  const Complex z = 0.0;
  ComplexMatrix t{
      {z, z, z, z, -p1, z, z, z, -p2},
      {z, p1, z, z, z, z, z, z, z},
      {z, z, p2, z, z, z, z, z, z},
      {z, z, z, p1, z, z, z, z, z},
      {-p1, z, z, z, z, z, z, z, -p3},
      {z, z, z, z, z, p3, z, z, z},
      {z, z, z, z, z, z, p2, z, z},
      {z, z, z, z, z, z, z, p3, z},
      {-p2, z, z, z, -p3, z, z, z, z},
  };
  return 0.5 * t;
}

std::array<double, 3> depressed_cubic_roots_bisection(double a, double b) {
  if (!(a < 0.0)) throw std::invalid_argument("three distinct real roots need a < 0");
  const auto f = [&](double t) { return (t * t + a) * t + b; };
  const double crit = std::sqrt(-a / 3.0);
  const double bound = 1.0 + std::abs(a) + std::abs(b);

  // f rises on (-inf, -crit], falls on [-crit, crit], rises on [crit, inf).
  const auto solve = [&](double lo, double hi, bool increasing) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const bool below = f(mid) < 0.0;
      if (below == increasing) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  return {solve(-bound, -crit, true), solve(-crit, crit, false), solve(crit, bound, true)};
}

}  // namespace qwedge::reference
