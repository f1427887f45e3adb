#pragma once

namespace qwedge {

// Every numeric threshold used by the library lives here. Functions that
// need one take a `const Tolerances&` defaulted to `kDefaultTolerances`.
struct Tolerances {
  double hermitian = 1e-9;       // max |A_ij - conj(A_ji)| for state validation
  double trace = 1e-9;           // |Tr rho - 1|
  double psd = 1e-9;             // smallest admissible eigenvalue is -psd
  double normalization = 1e-12;  // |sum |a_i|^2 - 1| for pure states
  double distribution = 1e-12;   // |sum p_i - 1| for probability vectors
  double antisymmetric = 1e-9;   // entrywise bound on (I + SWAP)/2 * rho
  double purity = 1e-9;          // Tr rho^2 >= 1 - purity
  double entangled = 1e-9;       // negativity above which a state is flagged

  // Cyclic Jacobi: stop once ||offdiag||_F < jacobi_relative * ||A||_F.
  double jacobi_relative = 1e-12;
  int jacobi_max_sweeps = 100;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qwedge
