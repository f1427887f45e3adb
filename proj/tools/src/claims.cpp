#include "qwedge_app/claims.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <vector>

#include "qwedge/entanglement.hpp"
#include "qwedge/fermion_map.hpp"
#include "qwedge/random.hpp"
#include "qwedge/reductions.hpp"
#include "qwedge/states.hpp"
#include "qwedge_app/commands.hpp"
#include "qwedge_app/reference.hpp"

namespace qwedge::app {

namespace {

constexpr std::size_t kQutrit = 3;
constexpr BipartiteShape kPair{3, 3};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

// Independent sample streams per criterion so adding samples to one check
// never perturbs another.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) : seed_(derive_seed(seed, stream)) {}

  std::uint64_t next() { return derive_seed(seed_, counter_++); }
  DensityMatrix mixed(std::size_t dim) { return random_mixed(dim, next()); }
  PureState pure(std::size_t dim) { return random_pure(dim, next()); }
  ComplexMatrix unitary(std::size_t dim) { return random_unitary(dim, next()); }

  /// Uniform point on the probability simplex (normalized exponentials).
  DiagonalDistribution simplex(std::size_t n) {
    Rng rng(next());
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
      x = -std::log(1.0 - rng.uniform());
      total += x;
    }
    for (auto& x : w) x /= total;
    return DiagonalDistribution(std::move(w));
  }

  std::size_t uniform_int(std::size_t lo, std::size_t hi) {
    Rng rng(next());
    return lo + static_cast<std::size_t>(rng.next_u64() % (hi - lo + 1));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

ClaimRow row(int criterion, std::string name, std::string target, std::string computed,
             double tolerance, bool pass) {
  return ClaimRow{criterion, std::move(name), std::move(target), std::move(computed),
                  sci(tolerance), pass};
}

// Sample whose value lies furthest from `target`, reported as "value".
struct Worst {
  double target;
  double value;
  double deviation = -1.0;

  explicit Worst(double t) : target(t), value(t) {}
  void add(double x) {
    const double dev = std::abs(x - target);
    if (!(dev <= deviation)) {
      deviation = dev;
      value = x;
    }
  }
};

void pure_state_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  constexpr double kTol = 1e-9;
  Sampler sampler(seed, 1);
  Worst neg(0.5);
  Worst entropy(std::numbers::ln2);
  Worst eig(0.5);
  double third_eig = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = density_from_pure(sampler.pure(kQutrit));
    const TwoFermionState two = embed(rho, kQutrit);
    neg.add(negativity(two.rho(), kPair).negativity);
    entropy.add(entanglement_entropy(two.rho(), kPair));
    const auto spectrum = hermitian_eigenvalues(reduced_fermion_state(rho, kQutrit).matrix());
    eig.add(spectrum[0]);
    eig.add(spectrum[1]);
    third_eig = std::max(third_eig, std::abs(spectrum[2]));
  }
  rows.push_back(row(1, "pure-state negativity (200 Haar states)", "1/2 = 0.5", num(neg.value),
                     kTol, neg.deviation <= kTol));
  rows.push_back(row(2, "pure-state entropy", "ln 2 = " + num(std::numbers::ln2),
                     num(entropy.value), kTol, entropy.deviation <= kTol));
  rows.push_back(row(2, "pure reduced nonzero eigenvalues", "1/2, 1/2", num(eig.value), kTol,
                     eig.deviation <= kTol && third_eig <= kTol));
}

void maximally_mixed_claims(std::vector<ClaimRow>& rows) {
  constexpr double kTol = 1e-9;
  const DiagonalDistribution uniform({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  const double e = embedded_negativity(density_from_diagonal(uniform), kQutrit).negativity;
  rows.push_back(row(3, "infimum negativity (maximally chaotic state)", "1/3 = " + num(1.0 / 3.0),
                     num(e), kTol, std::abs(e - 1.0 / 3.0) <= kTol));

  const CubicAnalysis cubic = diagonal_cubic_analysis(uniform);
  const std::array<double, 3> expected{-2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  double dev = 0.0;
  for (int k = 0; k < 3; ++k) dev = std::max(dev, std::abs(cubic.roots[k] - expected[k]));
  rows.push_back(row(3, "maximally chaotic cubic roots", "{-2/3, 1/3, 1/3}",
                     num(cubic.roots[0]) + ", " + num(cubic.roots[1]) + ", " + num(cubic.roots[2]),
                     kTol, dev <= kTol));
}

void golden_matrix_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  {
    constexpr double kTol = 1e-14;
    Sampler sampler(seed, 4);
    const DensityMatrix rho = sampler.mixed(kQutrit);
    const double dev = max_abs_diff(embed(rho, kQutrit).matrix(),
                                    reference::qutrit_embedding_template(rho.matrix()));
    rows.push_back(row(4, "9x9 embedding matches symbolic template", "max |diff| = 0", sci(dev),
                       kTol, dev <= kTol));
  }
  constexpr double kTol = 1e-12;
  Sampler sampler(seed, 5);
  double mixed_dev = 0.0;
  double pure_dev = 0.0;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = sampler.mixed(kQutrit);
    mixed_dev = std::max(mixed_dev, max_abs_diff(reduced_fermion_state(rho, kQutrit).matrix(),
                                                 reference::qutrit_marginal_template(rho.matrix())));
    const PureState psi = sampler.pure(kQutrit);
    pure_dev = std::max(
        pure_dev, max_abs_diff(reduced_fermion_state(density_from_pure(psi), kQutrit).matrix(),
                               reference::qutrit_pure_marginal_template(psi.amplitudes())));
  }
  rows.push_back(row(5, "reduced state closed form (100 mixed)", "max |diff| = 0", sci(mixed_dev),
                     kTol, mixed_dev <= kTol));
  rows.push_back(row(5, "reduced state closed form (100 pure)", "max |diff| = 0", sci(pure_dev),
                     kTol, pure_dev <= kTol));
}

void cubic_consistency_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  constexpr double kTol = 1e-9;
  constexpr int kSamples = 1000;
  Sampler sampler(seed, 6);
  double dev = 0.0;
  int single_root = 0;
  int single_pt_eigenvalue = 0;
  for (int k = 0; k < kSamples; ++k) {
    const DiagonalDistribution p = sampler.simplex(3);
    const CubicAnalysis cubic = diagonal_cubic_analysis(p);
    const MonotoneReport full = embedded_negativity(density_from_diagonal(p), kQutrit);
    dev = std::max(dev, std::abs(-0.5 * cubic.roots[0] - full.negativity));
    if (cubic.negative_root_count(kTol) == 1) ++single_root;
    const auto below = std::count_if(full.neg_eigenvalues.begin(), full.neg_eigenvalues.end(),
                                     [](double l) { return l < -kTol; });
    if (below == 1) ++single_pt_eigenvalue;
  }
  rows.push_back(row(6, "|negative cubic root|/2 vs 9x9 negativity", "max |diff| = 0", sci(dev),
                     kTol, dev <= kTol));
  rows.push_back(row(6, "exactly one negative cubic root", std::to_string(kSamples) + "/" +
                                                               std::to_string(kSamples),
                     std::to_string(single_root) + "/" + std::to_string(kSamples), kTol,
                     single_root == kSamples));
  rows.push_back(row(6, "exactly one negative PT eigenvalue",
                     std::to_string(kSamples) + "/" + std::to_string(kSamples),
                     std::to_string(single_pt_eigenvalue) + "/" + std::to_string(kSamples), kTol,
                     single_pt_eigenvalue == kSamples));
}

void spectrum_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  constexpr double kTol = 1e-9;
  Sampler sampler(seed, 7);
  double dev = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = sampler.mixed(kQutrit);
    const auto small = hermitian_eigenvalues(rho.matrix());
    const auto big = hermitian_eigenvalues(embed(rho, kQutrit).matrix());
    for (std::size_t i = 0; i < big.size(); ++i) {
      const double expected = i < small.size() ? small[i] : 0.0;
      dev = std::max(dev, std::abs(big[i] - expected));
    }
  }
  rows.push_back(row(7, "embedding preserves spectrum (200 mixed)", "max |diff| = 0", sci(dev),
                     kTol, dev <= kTol));
}

void unitary_invariance_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  constexpr double kTol = 1e-9;
  Sampler sampler(seed, 8);
  double dev = 0.0;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = sampler.mixed(kQutrit);
    const ComplexMatrix u = sampler.unitary(kQutrit);
    const DensityMatrix rotated = density_from_matrix(u * rho.matrix() * u.adjoint());
    dev = std::max(dev, std::abs(embedded_negativity(rotated, kQutrit).negativity -
                                 embedded_negativity(rho, kQutrit).negativity));
  }
  rows.push_back(row(8, "negativity invariant under qutrit unitaries", "max |diff| = 0", sci(dev),
                     kTol, dev <= kTol));
}

void range_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  constexpr double kTol = 1e-9;
  Sampler sampler(seed, 9);
  double lo = 1.0;
  double hi = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double e = embedded_negativity(sampler.mixed(kQutrit), kQutrit).negativity;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  rows.push_back(row(9, "min negativity over 1000 mixed states", ">= 1/3", num(lo), kTol,
                     lo >= 1.0 / 3.0 - kTol));
  rows.push_back(row(9, "max negativity over 1000 mixed states", "<= 1/2", num(hi), kTol,
                     hi <= 0.5 + kTol));
  rows.push_back(row(9, "always entangled", "every E > 1e-3", num(lo), 1e-3, lo > 1e-3));
}

void convexity_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  Sampler sampler(seed, 10);
  int holds = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t count = sampler.uniform_int(2, 5);
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < count; ++i) {
      const DensityMatrix rho = (i % 2 == 0) ? sampler.mixed(kQutrit)
                                             : density_from_pure(sampler.pure(kQutrit));
      states.push_back(embed(rho, kQutrit).rho());
    }
    if (convexity_check(states, sampler.simplex(count), kPair)) ++holds;
  }
  rows.push_back(row(10, "convexity of negativity (100 mixtures)", "100/100",
                     std::to_string(holds) + "/100", 1e-9, holds == 100));
}

void separable_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  constexpr double kTol = 1e-9;
  Sampler sampler(seed, 11);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix a = sampler.mixed(kQutrit);
    const DensityMatrix b = sampler.mixed(kQutrit);
    const DensityMatrix ab = density_from_matrix(tensor_product(a.matrix(), b.matrix()));
    worst = std::max(worst, negativity(ab, kPair).negativity);
  }
  rows.push_back(row(11, "product states have zero negativity", "0", sci(worst), kTol,
                     worst <= kTol));
}

void oracle_claims(std::uint64_t seed, std::vector<ClaimRow>& rows) {
  Sampler sampler(seed, 12);
  double trace_dev = 0.0;
  double embed_dev = 0.0;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = sampler.mixed(kPair.total());
    for (const Subsystem keep : {Subsystem::A, Subsystem::B}) {
      trace_dev = std::max(trace_dev,
                           max_abs_diff(partial_trace(rho.matrix(), kPair, keep),
                                        reference::partial_trace_index_sum(rho.matrix(), kPair, keep)));
    }
    const DensityMatrix small = sampler.mixed(kQutrit);
    embed_dev = std::max(embed_dev, max_abs_diff(embed(small, kQutrit).matrix(),
                                                 reference::embed_by_isometry(small.matrix(), kQutrit)));
  }
  rows.push_back(row(12, "block partial trace vs index sum", "max |diff| = 0", sci(trace_dev),
                     1e-14, trace_dev <= 1e-14));
  rows.push_back(row(12, "outer-product embed vs isometry", "max |diff| = 0", sci(embed_dev),
                     1e-13, embed_dev <= 1e-13));
}

void determinism_claims(std::vector<ClaimRow>& rows) {
  const std::string first = sweep_csv(0.05);
  const std::string second = sweep_csv(0.05);
  rows.push_back(row(13, "sweep step=0.05 byte-identical", "identical",
                     first == second ? "identical" : "differs", 0.0,
                     first == second && !first.empty()));
}

}  // namespace

std::vector<ClaimRow> run_claims(std::uint64_t seed) {
  std::vector<ClaimRow> rows;
  pure_state_claims(seed, rows);
  maximally_mixed_claims(rows);
  golden_matrix_claims(seed, rows);
  cubic_consistency_claims(seed, rows);
  spectrum_claims(seed, rows);
  unitary_invariance_claims(seed, rows);
  range_claims(seed, rows);
  convexity_claims(seed, rows);
  separable_claims(seed, rows);
  oracle_claims(seed, rows);
  determinism_claims(rows);
  return rows;
}

std::string format_claim_table(const std::vector<ClaimRow>& rows) {
  std::size_t name_w = 5, target_w = 6, computed_w = 8;
  for (const auto& r : rows) {
    name_w = std::max(name_w, r.name.size());
    target_w = std::max(target_w, r.target.size());
    computed_w = std::max(computed_w, r.computed.size());
  }
  const auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  std::string out = pad("#", 4) + pad("claim", name_w + 2) + pad("target", target_w + 2) +
                    pad("computed", computed_w + 2) + pad("tol", 9) + "result\n";
  for (const auto& r : rows) {
    out += pad(std::to_string(r.criterion), 4) + pad(r.name, name_w + 2) +
           pad(r.target, target_w + 2) + pad(r.computed, computed_w + 2) + pad(r.tolerance, 9) +
           (r.pass ? "PASS" : "FAIL") + '\n';
  }
  return out;
}

}  // namespace qwedge::app
