#include "cl3/multivector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "cl3/errors.hpp"

namespace cl3 {
namespace {

// Basis blades as bitmasks over the generators (bit 0 = e1, bit 1 = e2,
// bit 2 = e3), with the orientation of each stored blade relative to the
// ascending product. e31 = e3 e1 = -e1 e3 is the only blade stored against
// ascending order.
constexpr std::array<unsigned, kBladeCount> kMask = {0b000, 0b001, 0b010, 0b100,
                                                     0b011, 0b101, 0b110, 0b111};
constexpr std::array<int, kBladeCount> kOrientation = {1, 1, 1, 1, 1, -1, 1, 1};

// Sign from sorting the concatenated generator word of two ascending
// blades: each generator of `a` must hop over every lower generator of `b`.
constexpr int reorderSign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned bit = 0; bit < 3; ++bit) {
    if (a & (1u << bit)) swaps += std::popcount(b & ((1u << bit) - 1u));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

constexpr std::size_t bladeOfMask(unsigned mask) {
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (kMask[i] == mask) return i;
  }
  return kBladeCount;
}

constexpr CayleyTable buildCayleyTable() {
  CayleyTable table{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      // Shared generators square to +1, so the product mask is the XOR.
      const unsigned mask = kMask[i] ^ kMask[j];
      const std::size_t k = bladeOfMask(mask);
      const int sign =
          kOrientation[i] * kOrientation[j] * reorderSign(kMask[i], kMask[j]) * kOrientation[k];
      table[i][j] = CayleyEntry{static_cast<std::uint8_t>(k), static_cast<std::int8_t>(sign)};
    }
  }
  return table;
}

constexpr CayleyTable kCayley = buildCayleyTable();

static_assert(kCayley[1][1].index == 0 && kCayley[1][1].sign == 1, "e1 e1 = 1");
static_assert(kCayley[1][2].index == 4 && kCayley[1][2].sign == 1, "e1 e2 = e12");
static_assert(kCayley[3][1].index == 5 && kCayley[3][1].sign == 1, "e3 e1 = e31");
static_assert(kCayley[7][7].index == 0 && kCayley[7][7].sign == -1, "i3^2 = -1");

}  // namespace

const CayleyTable& cayleyTable() { return kCayley; }

Multivector geometricProduct(const Multivector& m, const Multivector& n) {
  Multivector::Coefficients r{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const double mi = m[i];
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const CayleyEntry e = kCayley[i][j];
      r[e.index] += e.sign * (mi * n[j]);
    }
  }
  return Multivector(r);
}

Multivector gradeSelect(const Multivector& m, int k) {
  if (k < 0 || k > 3) {
    throw ArgumentError("gradeSelect: grade must be in 0..3, got " + std::to_string(k));
  }
  Multivector::Coefficients r{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (kBladeGrade[i] == k) r[i] = m[i];
  }
  return Multivector(r);
}

Multivector reverse(const Multivector& m) {
  Multivector::Coefficients r = m.coefficients();
  for (std::size_t i = 4; i < kBladeCount; ++i) r[i] = -r[i];
  return Multivector(r);
}

double scalarProduct(const Multivector& m, const Multivector& n) {
  double s = 0.0;
  for (std::size_t i = 0; i < kBladeCount; ++i) s += m[i] * n[i];
  return s;
}

double squareNorm(const Multivector& m) { return scalarProduct(m, m); }

double dot(const Multivector& a, const Multivector& b) {
  return a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

ComplexChannels channelDecompose(const Multivector& m) {
  ComplexChannels z;
  for (std::size_t j = 0; j < 4; ++j) z[j] = {m[kChannelReal[j]], m[kChannelImag[j]]};
  return z;
}

Multivector channelRecompose(const ComplexChannels& z) {
  Multivector::Coefficients c{};
  for (std::size_t j = 0; j < 4; ++j) {
    c[kChannelReal[j]] = z[j].real();
    c[kChannelImag[j]] = z[j].imag();
  }
  return Multivector(c);
}

Multivector expI3(double theta) {
  Multivector::Coefficients c{};
  c[0] = std::cos(theta);
  c[7] = std::sin(theta);
  return Multivector(c);
}

}  // namespace cl3
