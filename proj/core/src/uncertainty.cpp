#include "cl3/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cl3/cft.hpp"

namespace cl3 {
namespace {

void fillTrace(UncertaintyReport& r, const MultivectorField& f, const MultivectorField& spectrum) {
  r.traceSpatial = radialEnergyMoment(f);
  r.traceSpectral = radialEnergyMoment(spectrum);
  r.traceProduct = r.traceSpatial * r.traceSpectral;
  r.traceBound = 3.0 * uncertaintyConstant() * r.energyF * r.energyF;
  if (r.traceBound > 0.0) r.traceRatio = r.traceProduct / r.traceBound;
}

}  // namespace

double uncertaintyConstant() {
  const double twoPi = 2.0 * std::numbers::pi;
  return twoPi * twoPi * twoPi / 4.0;
}

MultivectorField makeGaussian(const GaussianSpec& spec, const Grid3& grid, const WarningSink& sink) {
  if (!(spec.k > 0.0) || !std::isfinite(spec.k)) {
    throw ArgumentError("makeGaussian: width parameter k must be positive and finite");
  }
  // Distance from the coordinate origin to the closest box face.
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < 3; ++a) {
    const double lo = std::abs(grid.coordinate(a, 0));
    const double hi = std::abs(grid.coordinate(a, grid.counts()[a] - 1));
    nearest = std::min({nearest, lo, hi});
  }
  const double edge = std::exp(-spec.k * nearest * nearest);
  if (edge > 1e-12) {
    std::ostringstream msg;
    msg << "makeGaussian: envelope is " << edge << " at the box edge (above 1e-12); "
        << "the periodic box truncates the Gaussian";
    warn(sink, msg.str());
  }
  return sample(
      [&spec](const Vec3& x) {
        return std::exp(-spec.k * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2])) * spec.c0;
      },
      grid);
}

UncertaintyReport uncertaintyReport(const MultivectorField& f, const Multivector& a,
                                    const Multivector& b) {
  requireVector(a, "uncertaintyReport (a)");
  requireVector(b, "uncertaintyReport (b)");
  const MultivectorField spectrum = cftFast(f);

  UncertaintyReport r;
  r.energyF = energy(f);
  r.spatialMoment = weightedEnergyMoment(f, a);
  r.spectralMoment = weightedEnergyMoment(spectrum, b);
  r.product = r.spatialMoment * r.spectralMoment;
  r.aDotB = dot(a, b);
  r.orthogonal = r.aDotB == 0.0;
  r.bound = r.aDotB * r.aDotB * uncertaintyConstant() * r.energyF * r.energyF;
  if (r.bound > 0.0) r.ratio = r.product / r.bound;
  fillTrace(r, f, spectrum);
  return r;
}

UncertaintyReport traceUncertaintyReport(const MultivectorField& f) {
  const MultivectorField spectrum = cftFast(f);
  UncertaintyReport r;
  r.energyF = energy(f);
  fillTrace(r, f, spectrum);
  return r;
}

}  // namespace cl3
