#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qwedge_app/claims.hpp"

namespace qwedge::app {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kDimension = 3;
inline constexpr int kBadFlag = 4;
}  // namespace exit_code

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Parses a sweep step written as a decimal ("0.05") or a fraction ("1/3").
std::optional<double> parse_step(std::string_view text);

/// CSV text of the diagonal-state sweep, header included. Throws
/// std::invalid_argument unless 0 < step <= 0.5.
std::string sweep_csv(double step);

// Each command returns its process exit code and never throws.

/// Embeds the d(d-1)/2-dimensional state in `input` and reports its negativity.
int cmd_negativity(const std::filesystem::path& input, std::size_t d, Streams io);
/// Writes the d^2 x d^2 two-fermion embedding of `input` to `output`.
int cmd_embed(const std::filesystem::path& input, std::size_t d,
              const std::filesystem::path& output, Streams io);
/// Inverse of cmd_embed. With `raw`, density validation of the input is
/// skipped; antisymmetric support is still required.
int cmd_extract(const std::filesystem::path& input, std::size_t d,
                const std::filesystem::path& output, bool raw, Streams io);
/// Writes the partial transpose (second fermion) of the embedding of `input`.
/// The output is generally indefinite; read it back with --raw.
int cmd_ptranspose(const std::filesystem::path& input, std::size_t d,
                   const std::filesystem::path& output, Streams io);
int cmd_sweep(double step, const std::filesystem::path& output, Streams io);
int cmd_verify(std::uint64_t seed, Streams io);

}  // namespace qwedge::app
