#pragma once

// Test-signal generators: random multivectors, random lattice fields,
// finite sums of plane waves (periodic and band-limited), and sums of
// modulated Gaussian wave packets (localized and smooth).

#include <random>
#include <vector>

#include "cl3/field.hpp"

namespace cl3 {

using Rng = std::mt19937_64;

// Coefficients uniform in [-scale, scale).
Multivector randomMultivector(Rng& rng, double scale = 1.0);

// A grade-1 vector with coefficients uniform in [-1, 1), normalized to unit
// length.
Multivector randomUnitVector(Rng& rng);

// Independent random coefficients at every site.
MultivectorField randomField(const Grid3& grid, Rng& rng);

// A plane wave C exp(i3 w . x).
struct PlaneWave {
  Vec3 omega;
  Multivector amplitude;
};

// Sum of plane waves, evaluable at any point.
class PlaneWaveSum {
 public:
  explicit PlaneWaveSum(std::vector<PlaneWave> waves) : waves_(std::move(waves)) {}

  Multivector operator()(const Vec3& x) const;
  MultivectorField sample(const Grid3& grid) const;
  const std::vector<PlaneWave>& waves() const { return waves_; }

 private:
  std::vector<PlaneWave> waves_;
};

// `count` plane waves with frequencies on the conjugate lattice of `grid`,
// signed indices drawn from [-maxIndex, maxIndex] per axis. The same sum
// stays on-lattice for every grid with the same box extent.
PlaneWaveSum randomBandLimited(const Grid3& grid, Rng& rng, int maxIndex, int count);

// C exp(-k |x - c|^2) exp(i3 w . x).
struct WavePacket {
  Vec3 center;
  double k;
  Vec3 omega;
  Multivector amplitude;
};

class PacketSum {
 public:
  explicit PacketSum(std::vector<WavePacket> packets) : packets_(std::move(packets)) {}

  Multivector operator()(const Vec3& x) const;
  MultivectorField sample(const Grid3& grid) const;
  const std::vector<WavePacket>& packets() const { return packets_; }

 private:
  std::vector<WavePacket> packets_;
};

struct PacketOptions {
  int count = 3;
  double centerSpread = 1.5;  // centers uniform in [-spread, spread)^3
  double minK = 0.5;
  double maxK = 2.0;
  double maxOmega = 1.5;  // |w_a| uniform in [-maxOmega, maxOmega)
};

PacketSum randomPackets(Rng& rng, const PacketOptions& options = {});

}  // namespace cl3
