#include "qwedge_app/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qwedge/entanglement.hpp"
#include "qwedge/error.hpp"
#include "qwedge/fermion_map.hpp"
#include "qwedge/reductions.hpp"
#include "qwedge_app/state_file.hpp"

namespace qwedge::app {

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ShapeMismatch:
      return exit_code::kDimension;
    case ErrorKind::DimensionTooSmall:
      return exit_code::kBadFlag;
    default:
      return exit_code::kInvalidInput;
  }
}

// Runs `body`, mapping every failure to an exit code and a one-line
// diagnostic that starts with the violated invariant's name.
template <typename Body>
int guarded(Streams io, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    io.err << e.what() << '\n';
    return exit_code::kInvalidInput;
  } catch (const Error& e) {
    io.err << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return exit_code::kInvalidInput;
  }
}

int check_d(std::size_t d, Streams io) {
  if (d < 2) {
    io.err << "DimensionTooSmall: --d must be at least 2, got " << d << '\n';
    return exit_code::kBadFlag;
  }
  return exit_code::kOk;
}

DensityMatrix read_input_state(const std::filesystem::path& input, std::size_t d) {
  ComplexMatrix m = read_state_file(input);
  if (m.dim() != wedge_dimension(d)) {
    throw Error(ErrorKind::DimensionMismatch,
                "--d " + std::to_string(d) + " expects a state of dimension " +
                    std::to_string(wedge_dimension(d)) + ", file has " + std::to_string(m.dim()));
  }
  return density_from_matrix(std::move(m));
}

}  // namespace

std::optional<double> parse_step(std::string_view text) {
  const auto parse_number = [](std::string_view s) -> std::optional<double> {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_number(text.substr(0, slash));
    const auto den = parse_number(text.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
  }
  return parse_number(text);
}

std::string sweep_csv(double step) {
  if (!(step > 0.0 && step <= 0.5)) {
    throw std::invalid_argument("step must satisfy 0 < step <= 0.5");
  }
  constexpr double kSlack = 1e-12;
  std::string out = "p1,p2,p3,negativity,neg_root\n";
  for (std::size_t i = 0; static_cast<double>(i) * step <= 1.0 + kSlack; ++i) {
    const double p1 = std::min(1.0, static_cast<double>(i) * step);
    for (std::size_t j = 0; p1 + static_cast<double>(j) * step <= 1.0 + kSlack; ++j) {
      const double p2 = std::min(1.0 - p1, static_cast<double>(j) * step);
      const double p3 = std::max(0.0, 1.0 - p1 - p2);
      const CubicAnalysis cubic = diagonal_cubic_analysis(DiagonalDistribution({p1, p2, p3}));
      out += format_real(p1) + ',' + format_real(p2) + ',' + format_real(p3) + ',' +
             format_real(cubic.negativity) + ',' + format_real(cubic.roots[0]) + '\n';
    }
  }
  return out;
}

int cmd_negativity(const std::filesystem::path& input, std::size_t d, Streams io) {
  if (const int rc = check_d(d, io)) return rc;
  return guarded(io, [&] {
    const DensityMatrix rho = read_input_state(input, d);
    const MonotoneReport report = embedded_negativity(rho, d);
    io.out << "d " << d << '\n';
    io.out << "negativity " << format_real(report.negativity) << '\n';
    io.out << "log_negativity " << format_real(report.log_negativity) << '\n';
    io.out << "neg_eigenvalues [";
    for (std::size_t k = 0; k < report.neg_eigenvalues.size(); ++k) {
      io.out << (k ? ", " : "") << format_real(report.neg_eigenvalues[k]);
    }
    io.out << "]\n";
    io.out << "entangled " << (report.entangled ? "true" : "false") << '\n';
    return exit_code::kOk;
  });
}

int cmd_embed(const std::filesystem::path& input, std::size_t d,
              const std::filesystem::path& output, Streams io) {
  if (const int rc = check_d(d, io)) return rc;
  return guarded(io, [&] {
    const TwoFermionState state = embed(read_input_state(input, d), d);
    write_state_file(output, state.matrix());
    return exit_code::kOk;
  });
}

int cmd_extract(const std::filesystem::path& input, std::size_t d,
                const std::filesystem::path& output, bool raw, Streams io) {
  if (const int rc = check_d(d, io)) return rc;
  return guarded(io, [&] {
    ComplexMatrix m = read_state_file(input);
    if (m.dim() != d * d) {
      throw Error(ErrorKind::DimensionMismatch,
                  "--d " + std::to_string(d) + " expects a two-fermion state of dimension " +
                      std::to_string(d * d) + ", file has " + std::to_string(m.dim()));
    }
    if (raw) {
      // Skip density validation of the input but keep the support check.
      const double sym = symmetric_component(m, d);
      if (!(sym <= kDefaultTolerances.antisymmetric)) {
        throw Error(ErrorKind::NotAntisymmetric,
                    "symmetric component reaches " + format_real(sym));
      }
      const ComplexMatrix out = wedge_matrix_elements(m, WedgeBasis(d));
      write_state_file(output, out);
      return exit_code::kOk;
    }
    write_state_file(output, extract(density_from_matrix(std::move(m)), d).matrix());
    return exit_code::kOk;
  });
}

int cmd_ptranspose(const std::filesystem::path& input, std::size_t d,
                   const std::filesystem::path& output, Streams io) {
  if (const int rc = check_d(d, io)) return rc;
  return guarded(io, [&] {
    const TwoFermionState state = embed(read_input_state(input, d), d);
    write_state_file(output, partial_transpose(state.rho(), BipartiteShape{d, d}, Subsystem::B));
    return exit_code::kOk;
  });
}

int cmd_sweep(double step, const std::filesystem::path& output, Streams io) {
  if (!(step > 0.0 && step <= 0.5)) {
    io.err << "invalid --step " << step << ": must satisfy 0 < step <= 0.5\n";
    return exit_code::kBadFlag;
  }
  return guarded(io, [&] {
    const std::string csv = sweep_csv(step);
    if (output.empty()) {
      io.out << csv;
    } else {
      std::ofstream file(output, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot write " + output.string());
      file << csv;
    }
    return exit_code::kOk;
  });
}

int cmd_verify(std::uint64_t seed, Streams io) {
  return guarded(io, [&] {
    const auto rows = run_claims(seed);
    io.out << format_claim_table(rows);
    bool all = true;
    for (const auto& row : rows) all = all && row.pass;
    io.out << (all ? "all claims PASS\n" : "some claims FAIL\n");
    return all ? exit_code::kOk : exit_code::kVerifyFailed;
  });
}

}  // namespace qwedge::app
