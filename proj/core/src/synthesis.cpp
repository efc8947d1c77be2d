#include "cl3/synthesis.hpp"

#include <cmath>
#include <numbers>

namespace cl3 {
namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

Multivector randomMultivector(Rng& rng, double scale) {
  Multivector::Coefficients c{};
  for (double& v : c) v = uniform(rng, -scale, scale);
  return Multivector(c);
}

Multivector randomUnitVector(Rng& rng) {
  for (;;) {
    const double x = uniform(rng, -1.0, 1.0);
    const double y = uniform(rng, -1.0, 1.0);
    const double z = uniform(rng, -1.0, 1.0);
    const double len = std::sqrt(x * x + y * y + z * z);
    if (len > 1e-3 && len <= 1.0) return Multivector::vector(x / len, y / len, z / len);
  }
}

MultivectorField randomField(const Grid3& grid, Rng& rng) {
  std::vector<Multivector> data(grid.siteCount());
  for (Multivector& m : data) m = randomMultivector(rng);
  return MultivectorField(grid, std::move(data));
}

Multivector PlaneWaveSum::operator()(const Vec3& x) const {
  Multivector acc;
  for (const PlaneWave& w : waves_) acc = acc + w.amplitude * expI3(dot3(w.omega, x));
  return acc;
}

MultivectorField PlaneWaveSum::sample(const Grid3& grid) const {
  return cl3::sample([this](const Vec3& x) { return (*this)(x); }, grid);
}

PlaneWaveSum randomBandLimited(const Grid3& grid, Rng& rng, int maxIndex, int count) {
  std::uniform_int_distribution<int> pick(-maxIndex, maxIndex);
  const Vec3 box = grid.extent();
  std::vector<PlaneWave> waves;
  waves.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Vec3 omega{};
    for (std::size_t a = 0; a < 3; ++a) omega[a] = 2.0 * std::numbers::pi * pick(rng) / box[a];
    waves.push_back({omega, randomMultivector(rng)});
  }
  return PlaneWaveSum(std::move(waves));
}

Multivector PacketSum::operator()(const Vec3& x) const {
  Multivector acc;
  for (const WavePacket& p : packets_) {
    const Vec3 d{x[0] - p.center[0], x[1] - p.center[1], x[2] - p.center[2]};
    const double envelope = std::exp(-p.k * dot3(d, d));
    acc = acc + envelope * (p.amplitude * expI3(dot3(p.omega, x)));
  }
  return acc;
}

MultivectorField PacketSum::sample(const Grid3& grid) const {
  return cl3::sample([this](const Vec3& x) { return (*this)(x); }, grid);
}

PacketSum randomPackets(Rng& rng, const PacketOptions& options) {
  std::vector<WavePacket> packets;
  packets.reserve(static_cast<std::size_t>(options.count));
  for (int i = 0; i < options.count; ++i) {
    WavePacket p;
    for (double& c : p.center) c = uniform(rng, -options.centerSpread, options.centerSpread);
    p.k = uniform(rng, options.minK, options.maxK);
    for (double& w : p.omega) w = uniform(rng, -options.maxOmega, options.maxOmega);
    p.amplitude = randomMultivector(rng);
    packets.push_back(p);
  }
  return PacketSum(std::move(packets));
}

}  // namespace cl3
