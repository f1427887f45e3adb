#include "qwedge_app/state_file.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace qwedge::app {

namespace {

class Cursor {
 public:
  Cursor(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  double number() {
    skip_ws();
    double value = 0.0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    // from_chars rejects a leading '+'; accept it for hand-written files.
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ", column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ComplexMatrix parse_state_text(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    lines.emplace_back(line, line_no);
  }
  if (lines.empty()) throw ParseError("empty state file");

  std::size_t dim = 0;
  {
    std::istringstream is{std::string(lines.front().first)};
    std::string word;
    long long n = 0;
    std::string trailing;
    if (!(is >> word >> n) || word != "dim" || n <= 0 || (is >> trailing)) {
      throw ParseError("line " + std::to_string(lines.front().second) +
                       ": expected header 'dim <n>' with n >= 1");
    }
    dim = static_cast<std::size_t>(n);
  }
  if (lines.size() - 1 != dim) {
    throw ParseError("expected " + std::to_string(dim) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  }

  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Cursor row(lines[i + 1].first, lines[i + 1].second);
    for (std::size_t j = 0; j < dim; ++j) {
      row.expect('[');
      const double re = row.number();
      row.expect(',');
      const double im = row.number();
      row.expect(']');
      m(i, j) = Complex(re, im);
    }
    if (!row.done()) row.fail("trailing characters after " + std::to_string(dim) + " entries");
  }
  return m;
}

std::string format_state_text(const ComplexMatrix& m) {
  std::string out = "dim " + std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ' ';
      out += '[';
      out += format_real(m(i, j).real());
      out += ", ";
      out += format_real(m(i, j).imag());
      out += ']';
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

void write_state_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_state_text(m);
}

}  // namespace qwedge::app
