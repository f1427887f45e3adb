#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qwedge/fermion_map.hpp"
#include "qwedge/states.hpp"
#include "qwedge_app/commands.hpp"
#include "qwedge_app/reference.hpp"
#include "qwedge_app/state_file.hpp"

using namespace qwedge;
using namespace qwedge::app;
namespace fs = std::filesystem;

namespace {

class Commands : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qwedge_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const ComplexMatrix& m) {
    const fs::path p = dir_ / name;
    write_state_file(p, m);
    return p;
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

  int run_negativity(const fs::path& input, std::size_t d) {
    out_.str("");
    err_.str("");
    return cmd_negativity(input, d, {out_, err_});
  }

  Streams io() { return {out_, err_}; }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

std::string field(const std::string& text, const std::string& key) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

}  // namespace

TEST_F(Commands, NegativityOfMaximallyChaoticQutrit) {
  const auto in = write("chaotic.txt", ComplexMatrix::identity(3) * (1.0 / 3.0));
  ASSERT_EQ(run_negativity(in, 3), exit_code::kOk) << err_.str();
  EXPECT_NEAR(std::stod(field(out_.str(), "negativity")), 1.0 / 3.0, 1e-9);
  EXPECT_EQ(field(out_.str(), "negativity").substr(0, 11), "0.333333333");
  EXPECT_EQ(field(out_.str(), "entangled"), "true");
  EXPECT_EQ(field(out_.str(), "d"), "3");
}

TEST_F(Commands, NegativityOfPureState) {
  const auto in = write("pure.txt", ComplexMatrix::diagonal({1.0, 0.0, 0.0}));
  ASSERT_EQ(run_negativity(in, 3), exit_code::kOk);
  EXPECT_NEAR(std::stod(field(out_.str(), "negativity")), 0.5, 1e-12);
  EXPECT_NEAR(std::stod(field(out_.str(), "log_negativity")), std::log(2.0), 1e-12);
}

TEST_F(Commands, NegativityErrorPaths) {
  const auto bad_trace = write("trace.txt", ComplexMatrix::diagonal({0.5, 0.3, 0.1}));
  EXPECT_EQ(run_negativity(bad_trace, 3), exit_code::kInvalidInput);
  EXPECT_EQ(err_.str().rfind("TraceNotOne", 0), 0u) << err_.str();

  const auto wrong_dim = write("dim.txt", ComplexMatrix::identity(4) * 0.25);
  EXPECT_EQ(run_negativity(wrong_dim, 3), exit_code::kDimension);
  EXPECT_EQ(err_.str().rfind("DimensionMismatch", 0), 0u) << err_.str();

  EXPECT_EQ(run_negativity(wrong_dim, 1), exit_code::kBadFlag);

  std::ofstream(path("garbage.txt")) << "dim two\n";
  EXPECT_EQ(run_negativity(path("garbage.txt"), 3), exit_code::kInvalidInput);
  EXPECT_EQ(run_negativity(path("missing.txt"), 3), exit_code::kInvalidInput);
}

TEST_F(Commands, EmbedWritesSingleWedgeProjector) {
  const auto in = write("e1.txt", ComplexMatrix::diagonal({1.0, 0.0, 0.0}));
  ASSERT_EQ(cmd_embed(in, 3, path("out.txt"), io()), exit_code::kOk) << err_.str();
  const ComplexMatrix m = read_state_file(path("out.txt"));
  ASSERT_EQ(m.dim(), 9u);
  EXPECT_EQ(m(1, 1), Complex(0.5));
  EXPECT_EQ(m(3, 3), Complex(0.5));
  EXPECT_EQ(m(1, 3), Complex(-0.5));
  EXPECT_EQ(m(3, 1), Complex(-0.5));
  EXPECT_EQ(m.frobenius_norm(), 1.0);
}

TEST_F(Commands, EmbedMatchesTemplateAndRoundTrips) {
  const DensityMatrix rho = random_mixed(3, 17);
  const auto in = write("rho.txt", rho.matrix());
  ASSERT_EQ(cmd_embed(in, 3, path("two.txt"), io()), exit_code::kOk);
  const ComplexMatrix two = read_state_file(path("two.txt"));
  EXPECT_EQ(two, reference::qutrit_embedding_template(rho.matrix()));
  EXPECT_LE(symmetric_component(two, 3), 1e-12);

  ASSERT_EQ(cmd_extract(path("two.txt"), 3, path("back.txt"), false, io()), exit_code::kOk)
      << err_.str();
  EXPECT_LE(max_abs_diff(read_state_file(path("back.txt")), rho.matrix()), 1e-12);
}

TEST_F(Commands, DiagonalEmbeddingMatchesTemplate) {
  const double p1 = 0.5, p2 = 0.3, p3 = 0.2;
  const auto in = write("diag.txt", ComplexMatrix::diagonal({p1, p2, p3}));
  ASSERT_EQ(cmd_embed(in, 3, path("two.txt"), io()), exit_code::kOk);
  const ComplexMatrix expected = reference::qutrit_embedding_template(ComplexMatrix::diagonal({p1, p2, p3}));
  EXPECT_EQ(read_state_file(path("two.txt")), expected);
}

TEST_F(Commands, PartialTransposeMatchesTemplate) {
  const DensityMatrix rho = random_mixed(3, 23);
  const auto in = write("rho.txt", rho.matrix());
  ASSERT_EQ(cmd_ptranspose(in, 3, path("pt.txt"), io()), exit_code::kOk) << err_.str();
  EXPECT_LE(max_abs_diff(read_state_file(path("pt.txt")),
                         reference::qutrit_partial_transpose_template(rho.matrix())),
            1e-15);
}

TEST_F(Commands, ExtractRawAcceptsUnnormalizedAntisymmetricInput) {
  const DensityMatrix rho = random_mixed(3, 31);
  const ComplexMatrix scaled = 2.0 * embed(rho, 3).matrix();
  const auto in = write("scaled.txt", scaled);

  EXPECT_EQ(cmd_extract(in, 3, path("a.txt"), false, io()), exit_code::kInvalidInput);
  ASSERT_EQ(cmd_extract(in, 3, path("b.txt"), true, io()), exit_code::kOk) << err_.str();
  EXPECT_LE(max_abs_diff(read_state_file(path("b.txt")), 2.0 * rho.matrix()), 1e-12);

  std::vector<Complex> v(9);
  v[1] = v[3] = 1.0 / std::sqrt(2.0);
  const auto sym = write("sym.txt", density_from_pure(PureState(v)).matrix());
  err_.str("");
  EXPECT_EQ(cmd_extract(sym, 3, path("c.txt"), true, io()), exit_code::kInvalidInput);
  EXPECT_EQ(err_.str().rfind("NotAntisymmetric", 0), 0u) << err_.str();
}

TEST_F(Commands, ExtractDimensionChecks) {
  const auto in = write("nine.txt", ComplexMatrix::identity(9) * (1.0 / 9.0));
  EXPECT_EQ(cmd_extract(in, 4, path("x.txt"), false, io()), exit_code::kDimension);
  EXPECT_EQ(cmd_extract(in, 1, path("x.txt"), false, io()), exit_code::kBadFlag);
}

TEST_F(Commands, SweepToFileAndStdout) {
  ASSERT_EQ(cmd_sweep(0.5, path("sweep.csv"), io()), exit_code::kOk);
  std::ifstream f(path("sweep.csv"));
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), sweep_csv(0.5));

  out_.str("");
  ASSERT_EQ(cmd_sweep(0.5, {}, io()), exit_code::kOk);
  EXPECT_EQ(out_.str(), sweep_csv(0.5));
}

TEST(SweepCsv, HalfStepGrid) {
  const std::string csv = sweep_csv(0.5);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "p1,p2,p3,negativity,neg_root");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 6);
  EXPECT_NE(csv.find("\n1,0,0,0.5,-1\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("\n0,0,1,0.5,"), std::string::npos) << csv;
}

TEST(SweepCsv, ThirdStepContainsCenter) {
  const std::string csv = sweep_csv(1.0 / 3.0);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  double center = -1.0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string p1, p2, p3, e;
    std::getline(cells, p1, ',');
    std::getline(cells, p2, ',');
    std::getline(cells, p3, ',');
    std::getline(cells, e, ',');
    if (std::abs(std::stod(p1) - 1.0 / 3.0) < 1e-9 && std::abs(std::stod(p2) - 1.0 / 3.0) < 1e-9) {
      center = std::stod(e);
    }
  }
  EXPECT_EQ(rows, 10);
  EXPECT_NEAR(center, 1.0 / 3.0, 1e-9);
}

TEST(SweepCsv, FineGridMinimumNearCenter) {
  const std::string csv = sweep_csv(0.05);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  double best = 1.0, best_p1 = 0.0, best_p2 = 0.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    double p1 = 0, p2 = 0, p3 = 0, e = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &p1, &p2, &p3, &e), 4);
    EXPECT_NEAR(p1 + p2 + p3, 1.0, 1e-12);
    EXPECT_GE(e, 1.0 / 3.0 - 1e-9);
    EXPECT_LE(e, 0.5 + 1e-9);
    if (e < best) {
      best = e;
      best_p1 = p1;
      best_p2 = p2;
    }
  }
  EXPECT_EQ(rows, 231);
  EXPECT_NEAR(best_p1, 1.0 / 3.0, 0.05);
  EXPECT_NEAR(best_p2, 1.0 / 3.0, 0.05);
  EXPECT_EQ(csv, sweep_csv(0.05));
}

TEST(SweepCsv, RejectsInvalidStep) {
  EXPECT_THROW(sweep_csv(0.0), std::invalid_argument);
  EXPECT_THROW(sweep_csv(-0.1), std::invalid_argument);
  EXPECT_THROW(sweep_csv(0.6), std::invalid_argument);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_sweep(0.7, {}, {out, err}), exit_code::kBadFlag);
}

TEST(ParseStep, DecimalsAndFractions) {
  EXPECT_EQ(parse_step("0.05"), 0.05);
  EXPECT_EQ(parse_step("1/3"), 1.0 / 3.0);
  EXPECT_FALSE(parse_step("abc").has_value());
  EXPECT_FALSE(parse_step("1/0").has_value());
  EXPECT_FALSE(parse_step("0.1x").has_value());
}
