#pragma once

// Multivectors of the Euclidean geometric algebra Cl(3,0).
//
// Coefficients are stored over the graded basis
//   {1, e1, e2, e3, e12, e31, e23, e123}
// in exactly that order. The order is part of the MVF3 file format; do not
// reorder.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cl3 {

enum class Blade : std::uint8_t {
  scalar = 0,
  e1 = 1,
  e2 = 2,
  e3 = 3,
  e12 = 4,
  e31 = 5,
  e23 = 6,
  e123 = 7,
};

inline constexpr std::size_t kBladeCount = 8;

// Grade of each basis blade, indexed by coefficient position.
inline constexpr std::array<int, kBladeCount> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

inline constexpr std::array<std::string_view, kBladeCount> kBladeName = {
    "1", "e1", "e2", "e3", "e12", "e31", "e23", "e123"};

constexpr std::size_t index(Blade b) { return static_cast<std::size_t>(b); }

class Multivector {
 public:
  using Coefficients = std::array<double, kBladeCount>;

  constexpr Multivector() = default;
  constexpr explicit Multivector(const Coefficients& c) : c_(c) {}

  static constexpr Multivector scalar(double s) {
    Coefficients c{};
    c[0] = s;
    return Multivector(c);
  }
  static constexpr Multivector basis(Blade b, double weight = 1.0) {
    Coefficients c{};
    c[index(b)] = weight;
    return Multivector(c);
  }
  static constexpr Multivector vector(double x, double y, double z) {
    return Multivector(Coefficients{0.0, x, y, z, 0.0, 0.0, 0.0, 0.0});
  }
  static constexpr Multivector pseudoscalar(double s = 1.0) {
    return basis(Blade::e123, s);
  }

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double operator[](Blade b) const { return c_[index(b)]; }
  constexpr const Coefficients& coefficients() const { return c_; }

  // Scalar part <M>_0.
  constexpr double scalarPart() const { return c_[0]; }
  // Vector part as a plain triple (e1, e2, e3).
  constexpr std::array<double, 3> vectorPart() const { return {c_[1], c_[2], c_[3]}; }

  // True iff every coefficient outside grade 1 is exactly zero. The zero
  // multivector counts as a vector.
  constexpr bool isVector() const {
    return c_[0] == 0.0 && c_[4] == 0.0 && c_[5] == 0.0 && c_[6] == 0.0 && c_[7] == 0.0;
  }

  friend constexpr Multivector operator+(const Multivector& a, const Multivector& b) {
    Coefficients r{};
    for (std::size_t i = 0; i < kBladeCount; ++i) r[i] = a.c_[i] + b.c_[i];
    return Multivector(r);
  }
  friend constexpr Multivector operator-(const Multivector& a, const Multivector& b) {
    Coefficients r{};
    for (std::size_t i = 0; i < kBladeCount; ++i) r[i] = a.c_[i] - b.c_[i];
    return Multivector(r);
  }
  friend constexpr Multivector operator-(const Multivector& a) {
    Coefficients r{};
    for (std::size_t i = 0; i < kBladeCount; ++i) r[i] = -a.c_[i];
    return Multivector(r);
  }
  friend constexpr Multivector operator*(double s, const Multivector& a) {
    Coefficients r{};
    for (std::size_t i = 0; i < kBladeCount; ++i) r[i] = s * a.c_[i];
    return Multivector(r);
  }
  friend constexpr Multivector operator*(const Multivector& a, double s) { return s * a; }
  friend constexpr Multivector operator/(const Multivector& a, double s) {
    Coefficients r{};
    for (std::size_t i = 0; i < kBladeCount; ++i) r[i] = a.c_[i] / s;
    return Multivector(r);
  }

  // Coefficient-wise IEEE comparison (so NaN != NaN, +0 == -0).
  friend constexpr bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Coefficients c_{};
};

// One entry of the Cayley table: blade_i * blade_j = sign * blade_{index}.
struct CayleyEntry {
  std::uint8_t index;
  std::int8_t sign;
};

using CayleyTable = std::array<std::array<CayleyEntry, kBladeCount>, kBladeCount>;

// Table generated from e_i e_j = -e_j e_i (i != j), e_i^2 = +1.
const CayleyTable& cayleyTable();

Multivector geometricProduct(const Multivector& m, const Multivector& n);

inline Multivector operator*(const Multivector& m, const Multivector& n) {
  return geometricProduct(m, n);
}

// <M>_k. Throws ArgumentError unless 0 <= k <= 3.
Multivector gradeSelect(const Multivector& m, int k);

// Reversion: grades 0 and 1 kept, grades 2 and 3 negated.
Multivector reverse(const Multivector& m);

// Sum_A m_A n_A, equal to <M reverse(N)>_0.
double scalarProduct(const Multivector& m, const Multivector& n);

// ||M||^2 = Sum_A m_A^2.
double squareNorm(const Multivector& m);

// Euclidean dot product of the grade-1 parts.
double dot(const Multivector& a, const Multivector& b);

// The pseudoscalar i3 = e123 is central with i3^2 = -1, which makes Cl(3,0)
// a four-dimensional module over C. The channels pair each blade with its
// i3-multiple: (1, e123), (e1, e23), (e2, e31), (e3, e12).
using ComplexChannels = std::array<std::complex<double>, 4>;

inline constexpr std::array<std::size_t, 4> kChannelReal = {0, 1, 2, 3};
inline constexpr std::array<std::size_t, 4> kChannelImag = {7, 6, 5, 4};

ComplexChannels channelDecompose(const Multivector& m);
Multivector channelRecompose(const ComplexChannels& z);

// cos(theta) + i3 sin(theta).
Multivector expI3(double theta);

}  // namespace cl3
