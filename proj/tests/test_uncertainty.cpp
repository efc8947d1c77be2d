#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "cl3/errors.hpp"
#include "cl3/synthesis.hpp"
#include "cl3/uncertainty.hpp"
#include "support/oracles.hpp"

using namespace cl3;

namespace {

const Multivector kE1 = Multivector::basis(Blade::e1);
const Multivector kE2 = Multivector::basis(Blade::e2);
const Multivector kE3 = Multivector::basis(Blade::e3);

Grid3 boxFor(double k, std::size_t n = 64) {
  return Grid3::cube(n, 16.0 / std::sqrt(k) / static_cast<double>(n));
}

bool same(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

}  // namespace

TEST(UncertaintyConstant, Value) {
  EXPECT_DOUBLE_EQ(uncertaintyConstant(), std::pow(2.0 * oracle::kPi, 3) / 4.0);
}

TEST(MakeGaussian, ValueAtOrigin) {
  const MultivectorField f = makeGaussian({}, Grid3::cube(8, 0.5));
  EXPECT_EQ(f.at(4, 4, 4), Multivector::scalar(1.0));
}

TEST(MakeGaussian, BladeAmplitudeScalesEnvelope) {
  const double k = 0.7;
  const Grid3 g = Grid3::cube(6, 0.4);
  const MultivectorField f = makeGaussian({Multivector::basis(Blade::e12), k}, g);
  for (std::size_t s = 0; s < f.size(); ++s) {
    const Vec3 x = g.position(s);
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    EXPECT_NEAR(squareNorm(f[s]), std::exp(-2.0 * k * r2), 1e-15);
    EXPECT_EQ(gradeSelect(f[s], 2), f[s]);
  }
}

TEST(MakeGaussian, EnergyMatchesClosedForm) {
  const MultivectorField f = makeGaussian({}, boxFor(1.0));
  EXPECT_LE(oracle::relErr(energy(f), std::pow(oracle::kPi / 2.0, 1.5)), 1e-6);
}

TEST(MakeGaussian, RejectsNonPositiveWidth) {
  const Grid3 g = Grid3::cube(4, 1.0);
  EXPECT_THROW(makeGaussian({Multivector::scalar(1.0), 0.0}, g), ArgumentError);
  EXPECT_THROW(makeGaussian({Multivector::scalar(1.0), -1.0}, g), ArgumentError);
  EXPECT_THROW(makeGaussian({Multivector::scalar(1.0), NAN}, g), ArgumentError);
}

TEST(MakeGaussian, WarnsWhenBoxTruncatesEnvelope) {
  std::vector<std::string> warnings;
  const WarningSink sink = [&](std::string_view m) { warnings.emplace_back(m); };
  makeGaussian({}, Grid3::cube(8, 0.5), sink);
  EXPECT_EQ(warnings.size(), 1u);
  warnings.clear();
  makeGaussian({}, boxFor(1.0), sink);
  EXPECT_TRUE(warnings.empty());
}

TEST(UncertaintyReport, ZeroField) {
  const UncertaintyReport r = uncertaintyReport(MultivectorField(Grid3::cube(8, 0.5)), kE1, kE1);
  EXPECT_EQ(r.energyF, 0.0);
  EXPECT_EQ(r.spatialMoment, 0.0);
  EXPECT_EQ(r.spectralMoment, 0.0);
  EXPECT_EQ(r.bound, 0.0);
  EXPECT_FALSE(r.ratio.has_value());
  EXPECT_EQ(r.traceBound, 0.0);
  EXPECT_FALSE(r.traceRatio.has_value());
}

TEST(UncertaintyReport, OrthogonalDirectionsDegenerate) {
  Rng rng(1);
  const MultivectorField f = randomPackets(rng).sample(Grid3::cube(32, 0.5));
  const UncertaintyReport r = uncertaintyReport(f, kE1, kE2);
  EXPECT_TRUE(r.orthogonal);
  EXPECT_EQ(r.bound, 0.0);
  EXPECT_FALSE(r.ratio.has_value());
  EXPECT_GE(r.product, 0.0);
  EXPECT_GT(r.product, 0.0);
}

TEST(UncertaintyReport, RejectsNonVectorDirections) {
  const MultivectorField f(Grid3::cube(4, 1.0));
  EXPECT_THROW(uncertaintyReport(f, Multivector::scalar(1.0), kE1), ArgumentError);
  EXPECT_THROW(uncertaintyReport(f, kE1, Multivector::basis(Blade::e23)), ArgumentError);
  EXPECT_THROW(uncertaintyReport(MultivectorField(Grid3::cube(4, 1.0, Domain::frequency)), kE1, kE1),
               ArgumentError);
}

TEST(UncertaintyReport, GaussianAttainsEquality) {
  for (double k : {0.5, 1.0, 2.0}) {
    const UncertaintyReport r = uncertaintyReport(makeGaussian({Multivector::scalar(1.0), k}, boxFor(k)), kE1, kE1);
    ASSERT_TRUE(r.ratio.has_value());
    EXPECT_NEAR(*r.ratio, 1.0, 1e-3) << "k=" << k;
  }
}

TEST(UncertaintyReport, GaussianWithMultivectorAmplitude) {
  Rng rng(2);
  const GaussianSpec spec{randomMultivector(rng), 1.0};
  const Multivector a = randomUnitVector(rng);
  const UncertaintyReport r = uncertaintyReport(makeGaussian(spec, boxFor(1.0)), a, a);
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_NEAR(*r.ratio, 1.0, 1e-3);
}

TEST(UncertaintyReport, GaussianMomentsMatchClosedForms) {
  // Int x1^2 exp(-2 x^2) on the space side; Int w1^2 |F|^2 with
  // F = pi^{3/2} exp(-w^2 / 4) on the spectral side.
  const UncertaintyReport r = uncertaintyReport(makeGaussian({}, boxFor(1.0)), kE1, kE1);
  EXPECT_LE(oracle::relErr(r.spatialMoment, oracle::gaussianSecondMoment(2.0)), 1e-6);
  const double spectral = std::pow(oracle::kPi, 3) * oracle::gaussianSecondMoment(0.5);
  EXPECT_LE(oracle::relErr(r.spectralMoment, spectral), 1e-6);
}

TEST(UncertaintyReport, SignOfSecondDirectionIsIrrelevant) {
  Rng rng(3);
  const MultivectorField f = randomPackets(rng).sample(Grid3::cube(32, 0.5));
  const Multivector a = randomUnitVector(rng);
  const UncertaintyReport plus = uncertaintyReport(f, a, a);
  const UncertaintyReport minus = uncertaintyReport(f, a, -a);
  EXPECT_TRUE(same(plus.spatialMoment, minus.spatialMoment));
  EXPECT_TRUE(same(plus.spectralMoment, minus.spectralMoment));
  EXPECT_TRUE(same(plus.bound, minus.bound));
  EXPECT_TRUE(same(*plus.ratio, *minus.ratio));
  EXPECT_TRUE(same(plus.product, minus.product));
}

TEST(UncertaintyReport, RandomPacketsRespectBound) {
  Rng rng(4);
  const Grid3 g = Grid3::cube(48, 16.0 / 48.0);
  const PacketOptions options{3, 1.0, 0.5, 1.5, 1.0};
  for (int t = 0; t < 5; ++t) {
    const MultivectorField f = randomPackets(rng, options).sample(g);
    const Multivector a = randomUnitVector(rng);
    const Multivector b = randomUnitVector(rng);
    const UncertaintyReport r = uncertaintyReport(f, a, b);
    ASSERT_TRUE(r.ratio.has_value());
    EXPECT_GE(*r.ratio, 1.0 - 1e-3);
    ASSERT_TRUE(r.traceRatio.has_value());
    EXPECT_GE(*r.traceRatio, 1.0 - 1e-3);
  }
}

TEST(UncertaintyReport, ScaleCovariance) {
  Rng rng(5);
  const MultivectorField f = randomPackets(rng).sample(Grid3::cube(32, 0.5));
  const Multivector a = randomUnitVector(rng);
  const double c = -2.5;
  const UncertaintyReport r = uncertaintyReport(f, a, a);
  const UncertaintyReport s = uncertaintyReport(c * f, a, a);
  EXPECT_LE(oracle::relErr(s.energyF, c * c * r.energyF), 1e-12);
  EXPECT_LE(oracle::relErr(s.spatialMoment, c * c * r.spatialMoment), 1e-12);
  EXPECT_LE(oracle::relErr(s.spectralMoment, c * c * r.spectralMoment), 1e-12);
  EXPECT_LE(oracle::relErr(*s.ratio, *r.ratio), 1e-12);
}

TEST(TraceReport, ZeroField) {
  const UncertaintyReport r = traceUncertaintyReport(MultivectorField(Grid3::cube(8, 0.5)));
  EXPECT_EQ(r.traceSpatial, 0.0);
  EXPECT_EQ(r.traceSpectral, 0.0);
  EXPECT_EQ(r.traceBound, 0.0);
  EXPECT_FALSE(r.traceRatio.has_value());
}

TEST(TraceReport, MomentsDecomposeIntoAxes) {
  Rng rng(6);
  const MultivectorField f = randomPackets(rng).sample(Grid3::cube(32, 0.5));
  const UncertaintyReport x = uncertaintyReport(f, kE1, kE1);
  const UncertaintyReport y = uncertaintyReport(f, kE2, kE2);
  const UncertaintyReport z = uncertaintyReport(f, kE3, kE3);
  EXPECT_LE(oracle::relErr(x.traceSpatial, x.spatialMoment + y.spatialMoment + z.spatialMoment), 1e-12);
  EXPECT_LE(oracle::relErr(x.traceSpectral, x.spectralMoment + y.spectralMoment + z.spectralMoment), 1e-12);
  EXPECT_LE(oracle::relErr(x.traceBound, 3.0 * x.bound), 1e-12);
  const UncertaintyReport t = traceUncertaintyReport(f);
  EXPECT_EQ(t.traceSpatial, x.traceSpatial);
  EXPECT_EQ(t.traceSpectral, x.traceSpectral);
  EXPECT_EQ(t.spatialMoment, 0.0);
}

TEST(TraceReport, IsotropicGaussianProductIsThreeTimesBound) {
  // Each trace moment is three axis moments, so the product carries 9 axis
  // products against a bound of 3.
  const UncertaintyReport r = traceUncertaintyReport(makeGaussian({}, boxFor(1.0)));
  ASSERT_TRUE(r.traceRatio.has_value());
  EXPECT_NEAR(*r.traceRatio, 3.0, 3e-3);
}
