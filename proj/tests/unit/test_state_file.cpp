#include <gtest/gtest.h>

#include <filesystem>

#include "qwedge/states.hpp"
#include "qwedge_app/state_file.hpp"

using namespace qwedge;
using namespace qwedge::app;

TEST(StateFile, ParsesCommentsAndBlankLines) {
  const ComplexMatrix m = parse_state_text(
      "# a diagonal qutrit\n"
      "\n"
      "dim 3\n"
      "[0.5, 0] [0, 0] [0, 0]\n"
      "# middle comment\n"
      "[0, 0] [0.3, 0] [0, 0]\n"
      "[0, 0] [0, 0] [0.2, 0]\n");
  EXPECT_EQ(m, ComplexMatrix::diagonal({0.5, 0.3, 0.2}));
}

TEST(StateFile, ImaginaryParts) {
  const ComplexMatrix m = parse_state_text("dim 2\n[0.5, 0] [0, -0.25]\n[0, 0.25] [0.5, 0]\n");
  EXPECT_EQ(m(0, 1), Complex(0.0, -0.25));
  EXPECT_EQ(m(1, 0), Complex(0.0, 0.25));
}

TEST(StateFile, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix m = random_mixed(1 + seed % 9, seed).matrix();
    EXPECT_EQ(parse_state_text(format_state_text(m)), m);
  }
}

TEST(StateFile, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "qwedge_state_file_roundtrip.txt";
  const ComplexMatrix m = random_mixed(3, 5).matrix();
  write_state_file(path, m);
  EXPECT_EQ(read_state_file(path), m);
  std::filesystem::remove(path);
}

TEST(StateFile, NegativeZeroPrintsAsZero) {
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(-0.25), "-0.25");
}

TEST(StateFile, MalformedInputIsRejected) {
  EXPECT_THROW(parse_state_text(""), ParseError);
  EXPECT_THROW(parse_state_text("dim 0\n"), ParseError);
  EXPECT_THROW(parse_state_text("size 2\n"), ParseError);
  EXPECT_THROW(parse_state_text("dim 2\n[1, 0] [0, 0]\n"), ParseError);
  EXPECT_THROW(parse_state_text("dim 2\n[1, 0] [0, 0]\n[0, 0]\n"), ParseError);
  EXPECT_THROW(parse_state_text("dim 2\n[1, 0] [0, 0]\n[0, 0] [x, 0]\n"), ParseError);
  EXPECT_THROW(parse_state_text("dim 1\n[1, 0]\n[1, 0]\n"), ParseError);
  EXPECT_THROW(read_state_file("/nonexistent/qwedge/state.txt"), std::runtime_error);
}

TEST(StateFile, ErrorsCarryLineNumbers) {
  try {
    parse_state_text("dim 2\n[1, 0] [0, 0]\n[0, 0] [bad]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}
