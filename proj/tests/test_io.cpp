#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cl3/errors.hpp"
#include "cl3/cft.hpp"
#include "cl3/io.hpp"
#include "cl3/synthesis.hpp"
#include "cl3/uncertainty.hpp"

using namespace cl3;

namespace {

std::string serialize(const MultivectorField& f) {
  std::ostringstream out(std::ios::binary);
  writeField(f, out);
  return out.str();
}

MultivectorField parse(const std::string& bytes, const WarningSink& sink = {}) {
  std::istringstream in(bytes, std::ios::binary);
  return readField(in, sink);
}

bool bitIdentical(const MultivectorField& a, const MultivectorField& b) {
  if (!(a.grid() == b.grid()) || a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t c = 0; c < kBladeCount; ++c) {
      if (std::bit_cast<std::uint64_t>(a[s][c]) != std::bit_cast<std::uint64_t>(b[s][c])) return false;
    }
  }
  return true;
}

std::vector<std::string> lines(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < csv.size()) {
    const std::size_t end = csv.find("\r\n", start);
    out.push_back(csv.substr(start, end - start));
    start = end + 2;
  }
  return out;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> out;
  std::stringstream ss(row);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST(Mvf3, HeaderLayout) {
  const Grid3 g({2, 3, 4}, {0.5, 0.25, 2.0}, {-1.0, 0.0, 3.5}, Domain::frequency);
  const std::string bytes = serialize(MultivectorField(g));
  ASSERT_EQ(bytes.size(), kMvf3HeaderBytes + 24 * 64);
  EXPECT_EQ(bytes.substr(0, 4), "MVF3");
  auto u32 = [&](std::size_t off) {
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + off);
    return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 | std::uint32_t(p[3]) << 24;
  };
  auto f64 = [&](std::size_t off) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = bits << 8 | static_cast<unsigned char>(bytes[off + static_cast<std::size_t>(i)]);
    return std::bit_cast<double>(bits);
  };
  EXPECT_EQ(u32(4), 1u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 1);
  EXPECT_EQ(u32(9), 2u);
  EXPECT_EQ(u32(13), 3u);
  EXPECT_EQ(u32(17), 4u);
  EXPECT_EQ(f64(21), 0.5);
  EXPECT_EQ(f64(29), 0.25);
  EXPECT_EQ(f64(37), 2.0);
  EXPECT_EQ(f64(45), -1.0);
  EXPECT_EQ(f64(53), 0.0);
  EXPECT_EQ(f64(61), 3.5);
}

TEST(Mvf3, PayloadIsXFastestInBasisOrder) {
  const Grid3 g = Grid3::cube(2, 1.0);
  std::vector<Multivector> data(g.siteCount());
  data[g.flatIndex(1, 0, 0)] = Multivector::basis(Blade::e31, 7.0);
  const std::string bytes = serialize(MultivectorField(g, data));
  double v = 0.0;
  std::memcpy(&v, bytes.data() + kMvf3HeaderBytes + (1 * 8 + 5) * 8, 8);
  EXPECT_EQ(v, 7.0);
}

TEST(Mvf3, RoundTripIsBitExact) {
  Rng rng(1);
  const MultivectorField f = randomField(Grid3::centered({4, 4, 4}, {0.1, 0.2, 0.3}), rng);
  EXPECT_TRUE(bitIdentical(parse(serialize(f)), f));
  const std::string bytes = serialize(f);
  EXPECT_EQ(serialize(parse(bytes)), bytes);
}

TEST(Mvf3, SpecialValuesSurviveAndNaNIsFlagged) {
  Rng rng(2);
  const MultivectorField base = randomField(Grid3::cube(3, 1.0), rng);
  std::vector<Multivector> data(base.data().begin(), base.data().end());
  auto c = data[4].coefficients();
  c[0] = -0.0;
  c[1] = 0.0;
  c[2] = std::bit_cast<double>(std::uint64_t{0x7ff8000000000123});
  c[3] = -std::numeric_limits<double>::infinity();
  c[4] = std::numeric_limits<double>::denorm_min();
  data[4] = Multivector(c);
  const MultivectorField f(base.grid(), data);

  std::vector<std::string> warnings;
  const MultivectorField back = parse(serialize(f), [&](std::string_view m) { warnings.emplace_back(m); });
  EXPECT_TRUE(bitIdentical(back, f));
  EXPECT_EQ(warnings.size(), 1u);

  warnings.clear();
  parse(serialize(base), [&](std::string_view m) { warnings.emplace_back(m); });
  EXPECT_TRUE(warnings.empty());
}

TEST(Mvf3, FrequencyDomainTagPreserved) {
  Rng rng(3);
  const MultivectorField f = randomField(Grid3::cube(4, 0.5).conjugate(), rng);
  const MultivectorField back = parse(serialize(f));
  EXPECT_EQ(back.grid().domain(), Domain::frequency);
  EXPECT_TRUE(back.grid().sameLattice(f.grid()));
}

TEST(Mvf3, BadMagicIsFormatError) {
  std::string bytes = serialize(MultivectorField(Grid3::cube(2, 1.0)));
  bytes.replace(0, 4, "XXXX");
  EXPECT_THROW(parse(bytes), FormatError);
}

TEST(Mvf3, BadVersionOrDomainIsFormatError) {
  const std::string good = serialize(MultivectorField(Grid3::cube(2, 1.0)));
  std::string bytes = good;
  bytes[4] = 2;
  EXPECT_THROW(parse(bytes), FormatError);
  bytes = good;
  bytes[8] = 7;
  EXPECT_THROW(parse(bytes), FormatError);
  bytes = good;
  bytes[9] = 1;  // n0 = 1 is not a valid lattice
  EXPECT_THROW(parse(bytes), FormatError);
}

TEST(Mvf3, TruncationIsCorruption) {
  const std::string bytes = serialize(MultivectorField(Grid3::cube(2, 1.0)));
  EXPECT_THROW(parse(bytes.substr(0, bytes.size() - 8)), CorruptionError);
  EXPECT_THROW(parse(bytes.substr(0, 30)), CorruptionError);
}

TEST(Mvf3, TrailingBytesAreCorruption) {
  EXPECT_THROW(parse(serialize(MultivectorField(Grid3::cube(2, 1.0))) + "!"), CorruptionError);
}

TEST(Mvf3, PathOverloadsRoundTrip) {
  Rng rng(4);
  const MultivectorField f = randomField(Grid3::cube(3, 0.5), rng);
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "cl3cft_io_roundtrip.mvf3";
  writeField(f, path);
  EXPECT_EQ(std::filesystem::file_size(path), kMvf3HeaderBytes + 27 * 64);
  EXPECT_TRUE(bitIdentical(readField(path), f));
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(readField(path));
}

TEST(CoefficientSelector, Parsing) {
  EXPECT_EQ(std::get<Blade>(parseCoefficientSelector("0")), Blade::scalar);
  EXPECT_EQ(std::get<Blade>(parseCoefficientSelector("5")), Blade::e31);
  EXPECT_EQ(std::get<Blade>(parseCoefficientSelector("e23")), Blade::e23);
  EXPECT_EQ(std::get<Blade>(parseCoefficientSelector("e123")), Blade::e123);
  EXPECT_TRUE(std::holds_alternative<SquareNormSelector>(parseCoefficientSelector("norm2")));
  EXPECT_TRUE(std::holds_alternative<SquareNormSelector>(parseCoefficientSelector("squareNorm")));
  EXPECT_THROW(parseCoefficientSelector("8"), ArgumentError);
  EXPECT_THROW(parseCoefficientSelector("e13"), ArgumentError);
  EXPECT_THROW(parseCoefficientSelector(""), ArgumentError);
}

TEST(ExportSlice, ConstantFieldGivesEqualValues) {
  const Grid3 g = Grid3::centered({3, 4, 5}, {0.5, 1.0, 0.25});
  const MultivectorField f(g, std::vector<Multivector>(g.siteCount(), Multivector({2.5, 1, 0, 0, 0, 0, 0, 0})));
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const std::vector<std::string> rows = lines(exportSlice(f, axis, 1, Blade::scalar));
    const std::size_t expectedRows = g.siteCount() / g.counts()[axis];
    ASSERT_EQ(rows.size(), expectedRows + 1);
    for (std::size_t r = 1; r < rows.size(); ++r) EXPECT_EQ(fields(rows[r]).at(2), "2.5");
  }
}

TEST(ExportSlice, HeaderAndOrdering) {
  const Grid3 g({2, 3, 2}, {1.0, 0.5, 1.0}, {0.0, -0.5, 0.0});
  const MultivectorField f = sample([](const Vec3& x) { return Multivector::scalar(x[0] + 10 * x[1]); }, g);
  const std::vector<std::string> rows = lines(exportSlice(f, 2, 0, Blade::scalar));
  EXPECT_EQ(rows[0], "x1,x2,1");
  EXPECT_EQ(rows[1], "0,-0.5,-5");
  EXPECT_EQ(rows[2], "1,-0.5,-4");
  EXPECT_EQ(rows[3], "0,0,0");
  const std::vector<std::string> spectral = lines(exportSlice(cftFast(f), 0, 0, SquareNormSelector{}));
  EXPECT_EQ(spectral[0], "w2,w3,norm2");
}

TEST(ExportSlice, GaussianNormPeaksAtCenter) {
  const MultivectorField f = makeGaussian({Multivector::basis(Blade::e12), 1.0}, Grid3::cube(9, 0.5));
  const std::vector<std::string> rows = lines(exportSlice(f, 2, 4, SquareNormSelector{}));
  double best = -1.0;
  std::string where;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::vector<std::string> cells = fields(rows[r]);
    const double v = std::stod(cells[2]);
    if (v > best) {
      best = v;
      where = cells[0] + "," + cells[1];
    }
  }
  EXPECT_EQ(best, 1.0);
  EXPECT_EQ(where, "0,0");
}

TEST(ExportSlice, OutOfRangeIsArgumentError) {
  const MultivectorField f(Grid3::cube(4, 1.0));
  EXPECT_THROW(exportSlice(f, 0, 4, Blade::e1), ArgumentError);
  EXPECT_THROW(exportSlice(f, 3, 0, Blade::e1), ArgumentError);
}

TEST(FormatReal, SeventeenSignificantDigits) {
  EXPECT_EQ(formatReal(0.1), "0.10000000000000001");
  EXPECT_EQ(formatReal(1.0), "1");
  EXPECT_EQ(formatReal(-1.0 / 3.0), "-0.33333333333333331");
}
