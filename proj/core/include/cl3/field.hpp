#pragma once

// Multivector fields sampled on regular, axis-aligned, periodic 3D lattices,
// with central-difference differential operators and Riemann volume
// integrals.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cl3/multivector.hpp"

namespace cl3 {

enum class Domain : std::uint8_t { space = 0, frequency = 1 };

using Vec3 = std::array<double, 3>;
using Counts3 = std::array<std::size_t, 3>;

// Geometry of a periodic sampling lattice. Site (i, j, k) sits at
// origin + (i dx0, j dx1, k dx2); the flat index is x-fastest.
//
// Every grid also records the lattice it is Fourier-conjugate to
// (spacing 2 pi / (n dx)). For a space grid that is the centered frequency
// lattice; for a spectrum it is the space lattice the spectrum came from, so
// the inverse transform lands back on the original sample positions.
class Grid3 {
 public:
  // Throws ArgumentError if any n < 2 or any dx is not a positive finite
  // number. The conjugate lattice defaults to the centered one.
  Grid3(Counts3 n, Vec3 dx, Vec3 origin, Domain domain = Domain::space);

  // origin = -floor(n/2) dx on every axis (for even n this is -n dx / 2).
  static Grid3 centered(Counts3 n, Vec3 dx, Domain domain = Domain::space);
  static Grid3 cube(std::size_t n, double dx, Domain domain = Domain::space);

  const Counts3& counts() const { return n_; }
  const Vec3& spacing() const { return dx_; }
  const Vec3& origin() const { return origin_; }
  Domain domain() const { return domain_; }

  std::size_t siteCount() const { return n_[0] * n_[1] * n_[2]; }
  double cellVolume() const { return dx_[0] * dx_[1] * dx_[2]; }
  // Length of the periodic box along each axis (n dx).
  Vec3 extent() const;

  double coordinate(std::size_t axis, std::size_t i) const {
    return origin_[axis] + static_cast<double>(i) * dx_[axis];
  }
  Vec3 position(std::size_t i, std::size_t j, std::size_t k) const {
    return {coordinate(0, i), coordinate(1, j), coordinate(2, k)};
  }
  Vec3 position(std::size_t flat) const;
  std::size_t flatIndex(std::size_t i, std::size_t j, std::size_t k) const {
    return i + n_[0] * (j + n_[1] * k);
  }
  Counts3 siteIndex(std::size_t flat) const;

  // The Fourier-dual lattice: same counts, spacing 2 pi / (n dx), domain
  // flipped. conjugate().conjugate() reproduces this grid.
  Grid3 conjugate() const;

  // Copy of this grid with a different domain tag.
  Grid3 withDomain(Domain domain) const;

  // Same counts, spacing, origin and domain (the conjugate reference is
  // ignored).
  bool sameLattice(const Grid3& other) const;

  friend bool operator==(const Grid3&, const Grid3&) = default;

 private:
  Counts3 n_;
  Vec3 dx_;
  Vec3 origin_;
  Domain domain_;
  Vec3 conjugateSpacing_;
  Vec3 conjugateOrigin_;
};

// Origin of the centered lattice with n sites of spacing dx: -floor(n/2) dx.
double centeredOrigin(std::size_t n, double dx);

class MultivectorField {
 public:
  // All-zero field.
  explicit MultivectorField(const Grid3& grid);
  // Throws ArgumentError unless data.size() == grid.siteCount().
  MultivectorField(const Grid3& grid, std::vector<Multivector> data);

  const Grid3& grid() const { return grid_; }
  std::size_t size() const { return data_.size(); }
  std::span<const Multivector> data() const { return data_; }
  const Multivector& operator[](std::size_t flat) const { return data_[flat]; }
  const Multivector& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[grid_.flatIndex(i, j, k)];
  }

 private:
  Grid3 grid_;
  std::vector<Multivector> data_;
};

class ScalarField {
 public:
  explicit ScalarField(const Grid3& grid);
  ScalarField(const Grid3& grid, std::vector<double> data);

  const Grid3& grid() const { return grid_; }
  std::size_t size() const { return data_.size(); }
  std::span<const double> data() const { return data_; }
  double operator[](std::size_t flat) const { return data_[flat]; }

 private:
  Grid3 grid_;
  std::vector<double> data_;
};

using FieldExpression = std::function<Multivector(const Vec3&)>;
using ScalarExpression = std::function<double(const Vec3&)>;

// data[n] = expr(x_n). Throws ArgumentError on a frequency grid.
MultivectorField sample(const FieldExpression& expr, const Grid3& grid);
ScalarField sampleScalar(const ScalarExpression& expr, const Grid3& grid);

// Site-wise arithmetic. Binary operations throw ArgumentError if the grids
// do not describe the same lattice.
MultivectorField operator+(const MultivectorField& f, const MultivectorField& g);
MultivectorField operator-(const MultivectorField& f, const MultivectorField& g);
MultivectorField operator*(double s, const MultivectorField& f);
// Site-wise geometric product f(x) g(x).
MultivectorField pointwiseProduct(const MultivectorField& f, const MultivectorField& g);
// Site-wise lambda(x) f(x).
MultivectorField scale(const ScalarField& lambda, const MultivectorField& f);
// m f(x) and f(x) m for a constant multivector m.
MultivectorField leftMultiply(const Multivector& m, const MultivectorField& f);
MultivectorField rightMultiply(const MultivectorField& f, const Multivector& m);
// Site-wise map over values; the callback also receives the site position.
MultivectorField mapSites(const MultivectorField& f,
                          const std::function<Multivector(const Vec3&, const Multivector&)>& fn);
// Periodic roll: result(x) = f(x - shift * dx) for an integer lattice shift.
MultivectorField roll(const MultivectorField& f, const std::array<long, 3>& shift);

// max_n max_A |f_A(x_n)|.
double maxAbsCoefficient(const MultivectorField& f);
// max_n max_A |f_A(x_n) - g_A(x_n)|.
double maxAbsDifference(const MultivectorField& f, const MultivectorField& g);

// Periodic central difference a . grad f:
//   Sum_k a_k (f(x + dx_k e_k) - f(x - dx_k e_k)) / (2 dx_k).
// Throws ArgumentError if `a` is not grade-1. Works on either domain; the
// coordinates are whatever the grid describes.
MultivectorField directionalDiff(const MultivectorField& f, const Multivector& a);
ScalarField directionalDiff(const ScalarField& f, const Multivector& a);

// grad f = Sum_k e_k (d_k f), with d_k the same central difference.
MultivectorField vectorDerivative(const MultivectorField& f);

// 7-point periodic Laplacian, applied to all eight coefficients.
MultivectorField laplacian(const MultivectorField& f);

// Pairwise summation over a contiguous range, in index order, base blocks of
// eight. Deterministic for a given input length.
double pairwiseSum(std::span<const double> values);

// Sum_n f(x_n) cellVolume, each coefficient summed pairwise in flat-index
// order.
Multivector integrate(const MultivectorField& f);
double integrate(const ScalarField& f);

// Sum_n ||f(x_n)||^2 cellVolume.
double energy(const MultivectorField& f);

// Sum_n (a . x_n)^2 ||f(x_n)||^2 cellVolume. Throws ArgumentError if `a` is
// not grade-1.
double weightedEnergyMoment(const MultivectorField& f, const Multivector& a);

// Sum_n |x_n|^2 ||f(x_n)||^2 cellVolume.
double radialEnergyMoment(const MultivectorField& f);

// Throws ArgumentError naming `what` if `a` is not grade-1.
void requireVector(const Multivector& a, const char* what);

}  // namespace cl3
