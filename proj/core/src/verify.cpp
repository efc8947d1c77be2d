#include "cl3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cl3/cft.hpp"
#include "cl3/field.hpp"
#include "cl3/synthesis.hpp"
#include "cl3/uncertainty.hpp"

namespace cl3 {
namespace {

constexpr double kPi = std::numbers::pi;

double norm(const Multivector& m) { return std::sqrt(squareNorm(m)); }

double maxAbs(const Multivector& m) {
  double r = 0.0;
  for (std::size_t a = 0; a < kBladeCount; ++a) r = std::max(r, std::abs(m[a]));
  return r;
}

// max |f - g| / max |g|, or the absolute error when g vanishes.
double relativeError(const MultivectorField& f, const MultivectorField& g) {
  const double ref = maxAbsCoefficient(g);
  const double diff = maxAbsDifference(f, g);
  return ref > 0.0 ? diff / ref : diff;
}

double relativeError(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

std::string describe(const char* what, double v) {
  std::ostringstream os;
  os.precision(3);
  os << what << ' ' << std::scientific << v;
  return os.str();
}

class Suite {
 public:
  Suite(const VerifyOptions& options, const std::function<void(const CheckResult&)>& progress)
      : options_(options), progress_(progress), rng_(options.seed) {}

  // passed = measured <= tolerance.
  void atMost(std::string name, double measured, double tolerance, std::string detail = {}) {
    record({std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)});
  }
  // passed = measured >= tolerance.
  void atLeast(std::string name, double measured, double tolerance, std::string detail = {}) {
    record({std::move(name), measured >= tolerance, measured, tolerance, std::move(detail)});
  }
  void exact(std::string name, bool ok, std::string detail = {}) {
    record({std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)});
  }

  Rng& rng() { return rng_; }
  const VerifyOptions& options() const { return options_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void record(CheckResult r) {
    if (progress_) progress_(r);
    results_.push_back(std::move(r));
  }

  VerifyOptions options_;
  std::function<void(const CheckResult&)> progress_;
  Rng rng_;
  std::vector<CheckResult> results_;
};

void algebraChecks(Suite& s) {
  Rng& rng = s.rng();
  constexpr int kSamples = 1000;
  const Multivector i3 = Multivector::pseudoscalar();

  double assoc = 0.0;
  double antiAuto = 0.0;
  double cauchy = 0.0;
  bool central = true;
  bool homomorphic = true;
  for (int t = 0; t < kSamples; ++t) {
    const Multivector m = randomMultivector(rng);
    const Multivector n = randomMultivector(rng);
    const Multivector p = randomMultivector(rng);
    const double scale = norm(m) * norm(n) * norm(p);
    assoc = std::max(assoc, maxAbs((m * n) * p - m * (n * p)) / scale);
    antiAuto = std::max(antiAuto, maxAbs(reverse(m * n) - reverse(n) * reverse(m)) /
                                      (norm(m) * norm(n)));
    const double sp = scalarProduct(m, n);
    const double excess = sp * sp - squareNorm(m) * squareNorm(n);
    cauchy = std::max(cauchy, excess / (squareNorm(m) * squareNorm(n)));
    central = central && (i3 * m == m * i3);
    const ComplexChannels z = channelDecompose(m);
    const ComplexChannels zi = channelDecompose(i3 * m);
    for (std::size_t c = 0; c < 4; ++c) {
      homomorphic = homomorphic && zi[c] == std::complex<double>(-z[c].imag(), z[c].real());
    }
  }
  for (std::size_t b = 0; b < kBladeCount; ++b) {
    const Multivector e = Multivector::basis(static_cast<Blade>(b));
    central = central && (i3 * e == e * i3);
  }
  s.atMost("algebra/associativity", assoc, 1e-12);
  s.exact("algebra/i3-central", central);
  s.exact("algebra/i3-squared", i3 * i3 == Multivector::scalar(-1.0));
  s.atMost("algebra/reverse-anti-automorphism", antiAuto, 1e-12);
  s.atMost("algebra/cauchy-schwarz", cauchy, 1e-12);
  s.exact("algebra/channel-homomorphism", homomorphic);
}

void transformChecks(Suite& s) {
  Rng& rng = s.rng();
  const std::size_t n = s.options().size;
  const Grid3 grid = Grid3::cube(n, 0.5);
  const MultivectorField f = randomField(grid, rng);
  const MultivectorField g = randomField(grid, rng);
  const MultivectorField F = cftFast(f);
  const MultivectorField G = cftFast(g);

  s.atMost("cft/fast-vs-direct", relativeError(F, cftDirect(f)), 1e-10);
  s.atMost("cft/inversion", relativeError(cftInverse(F), f), 1e-12);

  const double twoPi3 = std::pow(2.0 * kPi, 3);
  s.atMost("cft/parseval", relativeError(energy(F) / twoPi3, energy(f)), 1e-12);

  auto innerIntegral = [](const MultivectorField& a, const MultivectorField& b) {
    std::vector<double> terms(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) terms[i] = (a[i] * reverse(b[i])).scalarPart();
    return pairwiseSum(terms) * a.grid().cellVolume();
  };
  const double lhs = innerIntegral(f, g);
  const double rhs = innerIntegral(F, G) / twoPi3;
  s.atMost("cft/plancherel", std::abs(lhs - rhs) / std::sqrt(energy(f) * energy(g)), 1e-10);

  const double alpha = 0.75;
  const double beta = -1.25;
  s.atMost("cft/linearity", relativeError(cftFast(alpha * f + beta * g), alpha * F + beta * G),
           1e-12);

  const std::array<long, 3> shift{1, -2, 3};
  const Vec3 a{shift[0] * grid.spacing()[0], shift[1] * grid.spacing()[1],
               shift[2] * grid.spacing()[2]};
  const MultivectorField delayed = mapSites(F, [&a](const Vec3& w, const Multivector& v) {
    return expI3(-(w[0] * a[0] + w[1] * a[1] + w[2] * a[2])) * v;
  });
  s.atMost("cft/delay", relativeError(cftFast(roll(f, shift)), delayed), 1e-12);

  const Grid3 freq = F.grid();
  const Vec3 w0{shift[0] * freq.spacing()[0], shift[1] * freq.spacing()[1],
                shift[2] * freq.spacing()[2]};
  const MultivectorField modulated = mapSites(f, [&w0](const Vec3& x, const Multivector& v) {
    return expI3(w0[0] * x[0] + w0[1] * x[1] + w0[2] * x[2]) * v;
  });
  s.atMost("cft/shift", relativeError(cftFast(modulated), roll(F, shift)), 1e-12);

  s.atMost("cft/convolution", relativeError(convolve(f, g), convolveDirect(f, g)), 1e-9);
}

void scalingCheck(Suite& s) {
  // f(x) = C0 exp(-x^2); F{f(2x)}(w) against (1/8) F{f}(w/2) in closed form.
  const Grid3 grid = Grid3::cube(80, 0.125);
  const Multivector c0 = randomMultivector(s.rng());
  const double a = 2.0;
  const MultivectorField scaled = makeGaussian({c0, a * a}, grid);
  const MultivectorField F = cftFast(scaled);
  const MultivectorField expected = mapSites(F, [&](const Vec3& w, const Multivector&) {
    const double w2 = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]) / (a * a);
    return (std::pow(kPi, 1.5) * std::exp(-w2 / 4.0) / (a * a * a)) * c0;
  });
  s.atMost("cft/scaling", relativeError(F, expected), 1e-6);
}

// Exact derivatives of a plane-wave sum.
MultivectorField waveGradient(const PlaneWaveSum& waves, const Grid3& grid) {
  const Multivector i3 = Multivector::pseudoscalar();
  return sample(
      [&](const Vec3& x) {
        Multivector acc;
        for (const PlaneWave& pw : waves.waves()) {
          const Multivector w = Multivector::vector(pw.omega[0], pw.omega[1], pw.omega[2]);
          const double phase = pw.omega[0] * x[0] + pw.omega[1] * x[1] + pw.omega[2] * x[2];
          acc = acc + w * pw.amplitude * i3 * expI3(phase);
        }
        return acc;
      },
      grid);
}

MultivectorField waveLaplacian(const PlaneWaveSum& waves, const Grid3& grid) {
  return sample(
      [&](const Vec3& x) {
        Multivector acc;
        for (const PlaneWave& pw : waves.waves()) {
          const double w2 = pw.omega[0] * pw.omega[0] + pw.omega[1] * pw.omega[1] +
                            pw.omega[2] * pw.omega[2];
          const double phase = pw.omega[0] * x[0] + pw.omega[1] * x[1] + pw.omega[2] * x[2];
          acc = acc + (-w2) * (pw.amplitude * expI3(phase));
        }
        return acc;
      },
      grid);
}

void derivativeChecks(Suite& s) {
  const Grid3 grid = Grid3::cube(32, 2.0 * kPi / 32.0);
  const PlaneWaveSum waves = randomBandLimited(grid, s.rng(), 3, 6);
  const MultivectorField f = waves.sample(grid);
  const MultivectorField grad = waveGradient(waves, grid);
  const MultivectorField lap = waveLaplacian(waves, grid);

  s.atMost("cft/vector-derivative-m1", relativeError(spectralDerivative(f, 1), grad), 1e-10);
  s.atMost("cft/vector-derivative-m2", relativeError(spectralDerivative(f, 2), lap), 1e-10);

  // Leading truncation terms: h^2/6 w^3 per axis for the first difference,
  // h^2/12 w^4 for the second.
  const double h = grid.spacing()[0];
  double firstBound = 0.0;
  double secondBound = 0.0;
  for (const PlaneWave& pw : waves.waves()) {
    double w3 = 0.0;
    double w4 = 0.0;
    for (double w : pw.omega) {
      w3 += std::pow(std::abs(w), 3);
      w4 += std::pow(w, 4);
    }
    firstBound += h * h / 6.0 * w3 * maxAbs(pw.amplitude) * 2.0;
    secondBound += h * h / 12.0 * w4 * maxAbs(pw.amplitude) * 2.0;
  }
  s.atMost("field/gradient-second-order", maxAbsDifference(vectorDerivative(f), grad),
           4.0 * firstBound);
  s.atMost("field/laplacian-second-order", maxAbsDifference(laplacian(f), lap), 4.0 * secondBound);
}

void uncertaintyChecks(Suite& s) {
  const Multivector e1 = Multivector::basis(Blade::e1);
  double worstGauss = 0.0;
  double worstTraceGauss = 0.0;
  for (double k : {0.5, 1.0, 2.0}) {
    const Grid3 grid = Grid3::cube(64, 16.0 / std::sqrt(k) / 64.0);
    const MultivectorField f = makeGaussian({Multivector::scalar(1.0), k}, grid);
    const UncertaintyReport r = uncertaintyReport(f, e1, e1);
    worstGauss = std::max(worstGauss, std::abs(r.ratio.value_or(0.0) - 1.0));
    // Every axis saturates its own bound, so the trace product is 9/3 = 3
    // times the trace bound.
    worstTraceGauss = std::max(worstTraceGauss, std::abs(r.traceRatio.value_or(0.0) - 3.0));
  }
  s.atMost("uncertainty/gaussian-equality", worstGauss, 1e-3);
  s.atMost("uncertainty/trace-gaussian-per-axis", worstTraceGauss, 1e-3);

  const Grid3 grid = Grid3::cube(96, 18.0 / 96.0);
  PacketOptions packets;
  packets.centerSpread = 1.0;
  packets.maxK = 1.5;
  packets.maxOmega = 1.0;
  double worst = std::numeric_limits<double>::infinity();
  double worstTrace = std::numeric_limits<double>::infinity();
  bool orthogonalOk = true;
  for (int t = 0; t < s.options().uncertaintyFields; ++t) {
    const MultivectorField f = randomPackets(s.rng(), packets).sample(grid);
    const Multivector a = randomUnitVector(s.rng());
    const UncertaintyReport r = uncertaintyReport(f, a, a);
    worst = std::min(worst, r.ratio.value_or(0.0));
    worstTrace = std::min(worstTrace, r.traceRatio.value_or(0.0));
    const UncertaintyReport o = uncertaintyReport(f, e1, Multivector::basis(Blade::e2));
    orthogonalOk = orthogonalOk && o.orthogonal && o.bound == 0.0 && o.product >= 0.0 &&
                   !o.ratio.has_value();
  }
  s.atLeast("uncertainty/directional-bound", worst, 1.0 - 1e-3,
            describe("smallest ratio", worst));
  s.atLeast("uncertainty/trace-bound", worstTrace, 1.0 - 1e-3,
            describe("smallest trace ratio", worstTrace));
  s.exact("uncertainty/orthogonal-degenerate", orthogonalOk);
}

void heatChecks(Suite& s) {
  const Grid3 grid = Grid3::cube(64, 0.5);
  const double spread = 1.0;
  const double t = 0.5;
  const MultivectorField f0 =
      sample([&](const Vec3& x) {
        return Multivector::scalar(std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / (4.0 * spread)));
      }, grid);
  const MultivectorField expected = sample(
      [&](const Vec3& x) {
        const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        return Multivector::scalar(std::pow(spread / (spread + t), 1.5) *
                                   std::exp(-r2 / (4.0 * (spread + t))));
      },
      grid);
  s.atMost("heat/gaussian-widening", maxAbsDifference(heatPropagate(f0, t), expected), 1e-6);

  bool monotone = true;
  for (int trial = 0; trial < 5; ++trial) {
    const MultivectorField f = randomField(Grid3::cube(16, 0.5), s.rng());
    double previous = energy(f);
    for (double time : {0.01, 0.1, 0.5, 2.0}) {
      const double e = energy(heatPropagate(f, time));
      monotone = monotone && e <= previous * (1.0 + 1e-12);
      previous = e;
    }
  }
  s.exact("heat/energy-decay", monotone);
}

}  // namespace

std::vector<CheckResult> runVerification(const VerifyOptions& options,
                                         const std::function<void(const CheckResult&)>& progress) {
  Suite suite(options, progress);
  algebraChecks(suite);
  transformChecks(suite);
  scalingCheck(suite);
  derivativeChecks(suite);
  uncertaintyChecks(suite);
  heatChecks(suite);
  return suite.take();
}

}  // namespace cl3
