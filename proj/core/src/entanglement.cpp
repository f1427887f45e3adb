#include "qwedge/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwedge/error.hpp"
#include "qwedge/fermion_map.hpp"

namespace qwedge {

MonotoneReport negativity(const DensityMatrix& rho, BipartiteShape shape, const Tolerances& tol) {
  const ComplexMatrix pt = partial_transpose(rho, shape, Subsystem::B);
  const std::vector<double> spectrum = hermitian_eigenvalues(pt, tol);

  MonotoneReport report;
  double norm1 = 0.0;
  for (double l : spectrum) {
    norm1 += std::abs(l);
    report.negativity += 0.5 * (std::abs(l) - l);
  }
  for (auto it = spectrum.rbegin(); it != spectrum.rend() && *it < 0.0; ++it) {
    report.neg_eigenvalues.push_back(*it);
  }
  report.log_negativity = std::log(norm1);
  report.entangled = report.negativity > tol.entangled;
  return report;
}

MonotoneReport embedded_negativity(const DensityMatrix& rho_in, std::size_t d,
                                   const Tolerances& tol) {
  return negativity(embed(rho_in, d, tol).rho(), BipartiteShape{d, d}, tol);
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  double s = 0.0;
  for (double l : hermitian_eigenvalues(rho.matrix(), tol)) {
    if (l > 0.0) s -= l * std::log(l);
  }
  return s;
}

double entanglement_entropy(const DensityMatrix& rho, BipartiteShape shape,
                            const Tolerances& tol) {
  if (shape.total() != rho.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "shape does not factor the state dimension");
  }
  double purity = 0.0;
  for (const auto& z : rho.matrix().entries()) purity += std::norm(z);
  if (purity < 1.0 - tol.purity) {
    throw Error(ErrorKind::NotPure, "Tr rho^2 = " + std::to_string(purity));
  }
  return von_neumann_entropy(partial_trace(rho, shape, Subsystem::A, tol), tol);
}

std::array<double, 3> depressed_cubic_roots(double a, double b) {
  if (a > 0.0) throw std::domain_error("depressed_cubic_roots: a > 0 has one real root");

  std::array<double, 3> roots{};
  if (a == 0.0) {
    roots.fill(-std::cbrt(b));
    return roots;
  }

  const double m = 2.0 * std::sqrt(-a / 3.0);
  const double arg = std::clamp(3.0 * b / (a * m), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  for (int k = 0; k < 3; ++k) {
    roots[k] = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  }

  const auto f = [&](double t) { return (t * t + a) * t + b; };
  for (double& t : roots) {
    const double slope = 3.0 * t * t + a;
    if (std::abs(slope) < 1e-8) continue;  // double root: Newton is ill-conditioned
    const double polished = t - f(t) / slope;
    if (std::abs(f(polished)) < std::abs(f(t))) t = polished;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int CubicAnalysis::negative_root_count(double threshold) const {
  return static_cast<int>(
      std::count_if(roots.begin(), roots.end(), [&](double r) { return r < -threshold; }));
}

double CubicAnalysis::max_residual() const {
  double worst = 0.0;
  for (double t : roots) {
    const double value =
        ((coefficients[0] * t + coefficients[1]) * t + coefficients[2]) * t + coefficients[3];
    worst = std::max(worst, std::abs(value));
  }
  return worst;
}

CubicAnalysis diagonal_cubic_analysis(const DiagonalDistribution& p) {
  if (p.size() != 3) {
    throw Error(ErrorKind::InvalidDistribution,
                "cubic analysis needs three probabilities, got " + std::to_string(p.size()));
  }
  const double p1 = p[0];
  const double p2 = p[1];
  const double p3 = p[2];

  CubicAnalysis out;
  out.coefficients = {1.0, 0.0, -(p1 * p1 + p2 * p2 + p3 * p3), 2.0 * p1 * p2 * p3};
  out.roots = depressed_cubic_roots(out.coefficients[2], out.coefficients[3]);
  out.negativity = out.roots[0] < 0.0 ? -0.5 * out.roots[0] : 0.0;
  return out;
}

bool convexity_check(std::span<const DensityMatrix> states, const DiagonalDistribution& weights,
                     BipartiteShape shape, double slack, const Tolerances& tol) {
  if (states.empty() || states.size() != weights.size()) {
    throw Error(ErrorKind::ShapeMismatch, "need one weight per state");
  }
  double weighted = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dim() != shape.total()) {
      throw Error(ErrorKind::ShapeMismatch, "state " + std::to_string(k) +
                                                " does not match the bipartite shape");
    }
    weighted += weights[k] * negativity(states[k], shape, tol).negativity;
  }
  const double mixed = negativity(mixture(states, weights), shape, tol).negativity;
  return mixed <= weighted + slack;
}

}  // namespace qwedge
