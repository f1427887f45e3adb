#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwedge/linalg.hpp"

namespace qwedge::app {

// Line-oriented text format for square complex matrices:
//
//   # comments and blank lines are ignored
//   dim 3
//   [0.5, 0] [0, -0.25] [0, 0]
//   ...                              (dim rows of dim [re, im] pairs)
//
// Numbers are written with 17 significant digits, so a write/read cycle
// reproduces every double exactly.

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& detail) : std::runtime_error("ParseError: " + detail) {}
};

ComplexMatrix parse_state_text(std::string_view text);
std::string format_state_text(const ComplexMatrix& m);

ComplexMatrix read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// "%.17g" with negative zero printed as 0.
std::string format_real(double x);

}  // namespace qwedge::app
