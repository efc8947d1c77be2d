#pragma once

// Numerical form of the directional uncertainty inequality
//
//   Int (a.x)^2 ||f||^2 d3x  *  Int (b.w)^2 ||F{f}||^2 d3w  >=  (a.b)^2 (2 pi)^3 F^2 / 4,
//
// with F = Int ||f||^2 d3x, and of its trace form
//
//   Int |x|^2 ||f||^2 d3x  *  Int |w|^2 ||F{f}||^2 d3w  >=  3 (2 pi)^3 F^2 / 4.
//
// Moments are taken about the coordinate origin. Gaussians C0 exp(-k x^2)
// centered at the origin attain equality.

#include <optional>

#include "cl3/errors.hpp"
#include "cl3/field.hpp"

namespace cl3 {

struct UncertaintyReport {
  double energyF = 0.0;
  double spatialMoment = 0.0;   // Int (a.x)^2 ||f||^2 d3x
  double spectralMoment = 0.0;  // Int (b.w)^2 ||F||^2 d3w
  double product = 0.0;         // spatialMoment * spectralMoment
  double aDotB = 0.0;
  double bound = 0.0;           // (a.b)^2 (2 pi)^3 F^2 / 4
  std::optional<double> ratio;  // product / bound, present iff bound > 0
  bool orthogonal = false;      // a.b == 0 exactly; the bound degenerates to 0

  double traceSpatial = 0.0;   // Int |x|^2 ||f||^2 d3x
  double traceSpectral = 0.0;  // Int |w|^2 ||F||^2 d3w
  double traceProduct = 0.0;
  double traceBound = 0.0;  // 3 (2 pi)^3 F^2 / 4
  std::optional<double> traceRatio;
};

struct GaussianSpec {
  Multivector c0 = Multivector::scalar(1.0);
  double k = 1.0;
};

// f(x) = C0 exp(-k |x|^2) sampled on a space grid. Throws ArgumentError for
// k <= 0 (or non-finite). Warns through `sink` when the envelope at the
// nearest box face exceeds 1e-12, i.e. the box truncates the Gaussian.
MultivectorField makeGaussian(const GaussianSpec& spec, const Grid3& grid,
                              const WarningSink& sink = {});

// Measures every directional and trace quantity of `f`. `a` and `b` must be
// grade-1 (ArgumentError otherwise). Asserts nothing about the result.
UncertaintyReport uncertaintyReport(const MultivectorField& f, const Multivector& a,
                                    const Multivector& b);

// Trace quantities only; directional fields stay zero.
UncertaintyReport traceUncertaintyReport(const MultivectorField& f);

// (2 pi)^3 / 4.
double uncertaintyConstant();

}  // namespace cl3
