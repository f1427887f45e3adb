#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qwedge::app {

inline constexpr std::uint64_t kDefaultSeed = 20091005;

/// One checked quantity. Several rows may belong to the same criterion.
struct ClaimRow {
  int criterion = 0;
  std::string name;
  std::string target;
  std::string computed;
  std::string tolerance;
  bool pass = false;
};

/// Runs every reproducibility criterion (1 through 13) with samples drawn
/// from `seed`. Criterion 13 here covers sweep determinism; whether the
/// `verify` command itself exits cleanly is checked by the acceptance binary.
std::vector<ClaimRow> run_claims(std::uint64_t seed = kDefaultSeed);

/// Fixed-width table with a PASS/FAIL column.
std::string format_claim_table(const std::vector<ClaimRow>& rows);

}  // namespace qwedge::app
