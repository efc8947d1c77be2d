#include "cl3/cft.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <string>

#include "cl3/errors.hpp"

namespace cl3 {
namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kChannels = 4;

// Planner calls are not thread-safe in FFTW; execution is.
std::mutex& plannerMutex() {
  static std::mutex m;
  return m;
}

// In-place 3D DFT of the four channel blocks stored back to back.
// sign = FFTW_FORWARD computes Sum_m z_m exp(-2 pi i k.m / n).
void transformChannels(std::vector<Complex>& buffer, const Counts3& n, int sign) {
  const int total = static_cast<int>(n[0] * n[1] * n[2]);
  // FFTW is row-major (last index fastest); our layout is x-fastest.
  const int dims[3] = {static_cast<int>(n[2]), static_cast<int>(n[1]), static_cast<int>(n[0])};
  auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(plannerMutex());
    plan = fftw_plan_many_dft(3, dims, static_cast<int>(kChannels), data, nullptr, 1, total, data,
                              nullptr, 1, total, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("cft: FFTW could not create a plan");
  fftw_execute(plan);
  std::lock_guard lock(plannerMutex());
  fftw_destroy_plan(plan);
}

// exp(sign * i * w0 * m * dx) for m in [0, n), where w0 is the first
// frequency of the conjugate lattice. w0 dx m = 2 pi r m / n with r = w0 / dw,
// which is an integer for centered lattices; reducing r m mod n keeps the
// angle small.
std::vector<Complex> lowerCornerPhase(std::size_t n, double w0, double dw, double sign) {
  double r = w0 / dw;
  if (std::abs(r - std::round(r)) < 1e-9) r = std::round(r);
  const double nn = static_cast<double>(n);
  std::vector<Complex> phase(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double turns = std::fmod(r * static_cast<double>(m), nn) / nn;
    phase[m] = std::polar(1.0, sign * kTwoPi * turns);
  }
  return phase;
}

// exp(sign * i * w_k * o) for every frequency index k on one axis.
std::vector<Complex> originPhase(const Grid3& freq, std::size_t axis, double o, double sign) {
  const std::size_t n = freq.counts()[axis];
  std::vector<Complex> phase(n);
  for (std::size_t k = 0; k < n; ++k) phase[k] = std::polar(1.0, sign * freq.coordinate(axis, k) * o);
  return phase;
}

std::vector<Complex> toChannels(const MultivectorField& f) {
  const std::size_t total = f.size();
  std::vector<Complex> buffer(kChannels * total);
  for (std::size_t s = 0; s < total; ++s) {
    const ComplexChannels z = channelDecompose(f[s]);
    for (std::size_t c = 0; c < kChannels; ++c) buffer[c * total + s] = z[c];
  }
  return buffer;
}

MultivectorField fromChannels(const Grid3& grid, const std::vector<Complex>& buffer) {
  const std::size_t total = grid.siteCount();
  std::vector<Multivector> data(total);
  for (std::size_t s = 0; s < total; ++s) {
    ComplexChannels z;
    for (std::size_t c = 0; c < kChannels; ++c) z[c] = buffer[c * total + s];
    data[s] = channelRecompose(z);
  }
  return MultivectorField(grid, std::move(data));
}

// Multiplies every channel by a separable per-site phase a0[i] a1[j] a2[k].
void applySeparable(std::vector<Complex>& buffer, const Grid3& grid,
                    const std::array<std::vector<Complex>, 3>& axisPhase, double scale) {
  const auto& n = grid.counts();
  const std::size_t total = grid.siteCount();
  for (std::size_t k = 0; k < n[2]; ++k) {
    for (std::size_t j = 0; j < n[1]; ++j) {
      const Complex jk = axisPhase[1][j] * axisPhase[2][k] * scale;
      for (std::size_t i = 0; i < n[0]; ++i) {
        const Complex w = axisPhase[0][i] * jk;
        const std::size_t s = grid.flatIndex(i, j, k);
        for (std::size_t c = 0; c < kChannels; ++c) buffer[c * total + s] *= w;
      }
    }
  }
}

void requireDomain(const MultivectorField& f, Domain d, const char* op) {
  if (f.grid().domain() != d) {
    throw ArgumentError(std::string(op) + (d == Domain::space ? ": expected a space-domain field"
                                                              : ": expected a frequency-domain field"));
  }
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Sum_n f(x_n) exp(sign i3 w . x_n), single-threaded, flat-index order.
Multivector kernelSum(const MultivectorField& f, const Vec3& w, double sign) {
  Multivector acc;
  for (std::size_t s = 0; s < f.size(); ++s) {
    const double theta = dot3(w, f.grid().position(s));
    acc = acc + f[s] * expI3(sign * theta);
  }
  return acc;
}

// Index offset of the lattice origin: -origin / dx, required to be integral.
std::array<long, 3> originOffset(const Grid3& g, const char* op) {
  std::array<long, 3> off{};
  for (std::size_t a = 0; a < 3; ++a) {
    const double r = -g.origin()[a] / g.spacing()[a];
    const double rr = std::round(r);
    if (std::abs(r - rr) > 1e-9 * std::max(1.0, std::abs(r))) {
      throw ArgumentError(std::string(op) + ": the lattice must contain the coordinate origin");
    }
    off[a] = static_cast<long>(rr);
  }
  return off;
}

void requireConvolvable(const MultivectorField& f, const MultivectorField& g, const char* op) {
  requireDomain(f, Domain::space, op);
  requireDomain(g, Domain::space, op);
  if (!f.grid().sameLattice(g.grid())) throw ArgumentError(std::string(op) + ": grid mismatch");
  originOffset(f.grid(), op);
}

// Spectrum-side pointwise multiply, transformed back to space.
MultivectorField applyMultiplier(const MultivectorField& f,
                                 const std::function<Multivector(const Vec3&, const Multivector&)>& fn) {
  return cftInverse(mapSites(cftFast(f), fn));
}

}  // namespace

MultivectorField cftDirect(const MultivectorField& f) {
  requireDomain(f, Domain::space, "cftDirect");
  const Grid3 freq = f.grid().conjugate();
  const double dv = f.grid().cellVolume();
  std::vector<Multivector> out(freq.siteCount());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = kernelSum(f, freq.position(k), -1.0) * dv;
  return MultivectorField(freq, std::move(out));
}

Multivector cftAt(const MultivectorField& f, const Multivector& omega) {
  requireDomain(f, Domain::space, "cftAt");
  requireVector(omega, "cftAt");
  return kernelSum(f, omega.vectorPart(), -1.0) * f.grid().cellVolume();
}

MultivectorField cftFast(const MultivectorField& f) {
  requireDomain(f, Domain::space, "cftFast");
  const Grid3& space = f.grid();
  const Grid3 freq = space.conjugate();

  std::array<std::vector<Complex>, 3> pre;
  std::array<std::vector<Complex>, 3> post;
  for (std::size_t a = 0; a < 3; ++a) {
    pre[a] = lowerCornerPhase(space.counts()[a], freq.origin()[a], freq.spacing()[a], -1.0);
    post[a] = originPhase(freq, a, space.origin()[a], -1.0);
  }

  std::vector<Complex> buffer = toChannels(f);
  applySeparable(buffer, space, pre, 1.0);
  transformChannels(buffer, space.counts(), FFTW_FORWARD);
  applySeparable(buffer, freq, post, space.cellVolume());
  return fromChannels(freq, buffer);
}

MultivectorField cftInverse(const MultivectorField& spectrum) {
  requireDomain(spectrum, Domain::frequency, "cftInverse");
  const Grid3& freq = spectrum.grid();
  const Grid3 space = freq.conjugate();

  std::array<std::vector<Complex>, 3> pre;
  std::array<std::vector<Complex>, 3> post;
  double scale = 1.0;
  for (std::size_t a = 0; a < 3; ++a) {
    pre[a] = originPhase(freq, a, space.origin()[a], 1.0);
    post[a] = lowerCornerPhase(space.counts()[a], freq.origin()[a], freq.spacing()[a], 1.0);
    scale *= freq.spacing()[a] / kTwoPi;
  }

  std::vector<Complex> buffer = toChannels(spectrum);
  applySeparable(buffer, freq, pre, 1.0);
  transformChannels(buffer, freq.counts(), FFTW_BACKWARD);
  applySeparable(buffer, space, post, scale);
  return fromChannels(space, buffer);
}

MultivectorField cftInverseDirect(const MultivectorField& spectrum) {
  requireDomain(spectrum, Domain::frequency, "cftInverseDirect");
  const Grid3 space = spectrum.grid().conjugate();
  const Vec3& dw = spectrum.grid().spacing();
  const double scale = (dw[0] / kTwoPi) * (dw[1] / kTwoPi) * (dw[2] / kTwoPi);
  std::vector<Multivector> out(space.siteCount());
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = kernelSum(spectrum, space.position(m), 1.0) * scale;
  }
  return MultivectorField(space, std::move(out));
}

MultivectorField convolve(const MultivectorField& f, const MultivectorField& g) {
  requireConvolvable(f, g, "convolve");
  return cftInverse(pointwiseProduct(cftFast(f), cftFast(g)));
}

MultivectorField convolveDirect(const MultivectorField& f, const MultivectorField& g) {
  requireConvolvable(f, g, "convolveDirect");
  const Grid3& grid = f.grid();
  const auto& n = grid.counts();
  const std::array<long, 3> off = originOffset(grid, "convolveDirect");
  // g(x_m - y_j) sits at index m - j + off, periodically.
  auto wrap = [](long v, std::size_t len) {
    const long l = static_cast<long>(len);
    return static_cast<std::size_t>(((v % l) + l) % l);
  };
  const double dv = grid.cellVolume();
  std::vector<Multivector> out(grid.siteCount());
  for (std::size_t m = 0; m < out.size(); ++m) {
    const Counts3 mi = grid.siteIndex(m);
    Multivector acc;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const Counts3 ji = grid.siteIndex(j);
      const std::size_t gi = grid.flatIndex(
          wrap(static_cast<long>(mi[0]) - static_cast<long>(ji[0]) + off[0], n[0]),
          wrap(static_cast<long>(mi[1]) - static_cast<long>(ji[1]) + off[1], n[1]),
          wrap(static_cast<long>(mi[2]) - static_cast<long>(ji[2]) + off[2], n[2]));
      acc = acc + f[j] * g[gi];
    }
    out[m] = acc * dv;
  }
  return MultivectorField(grid, std::move(out));
}

MultivectorField spectralDerivative(const MultivectorField& f, int m) {
  if (m < 1 || m > 2) {
    throw UnsupportedOrderError("spectralDerivative: order must be 1 or 2, got " + std::to_string(m));
  }
  requireDomain(f, Domain::space, "spectralDerivative");
  if (m == 1) {
    return applyMultiplier(f, [](const Vec3& w, const Multivector& F) {
      const Multivector i3w = Multivector::pseudoscalar() * Multivector::vector(w[0], w[1], w[2]);
      return i3w * F;
    });
  }
  return applyMultiplier(f, [](const Vec3& w, const Multivector& F) { return -dot3(w, w) * F; });
}

MultivectorField heatPropagate(const MultivectorField& f0, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ArgumentError("heatPropagate: time must be finite and non-negative");
  }
  requireDomain(f0, Domain::space, "heatPropagate");
  return applyMultiplier(f0, [t](const Vec3& w, const Multivector& F) {
    return std::exp(-dot3(w, w) * t) * F;
  });
}

}  // namespace cl3
