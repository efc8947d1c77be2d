#include "cl3/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cl3/errors.hpp"

namespace cl3 {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void requireSameLattice(const Grid3& a, const Grid3& b, const char* op) {
  if (!a.sameLattice(b)) throw ArgumentError(std::string(op) + ": fields live on different grids");
}

// Flat index of the neighbour one step along `axis` (+1 or -1), periodic.
struct Neighbours {
  std::array<std::vector<std::size_t>, 3> plus;
  std::array<std::vector<std::size_t>, 3> minus;
};

Neighbours neighbours(const Grid3& g) {
  const auto& n = g.counts();
  Neighbours nb;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    nb.plus[axis].resize(g.siteCount());
    nb.minus[axis].resize(g.siteCount());
  }
  for (std::size_t k = 0; k < n[2]; ++k) {
    for (std::size_t j = 0; j < n[1]; ++j) {
      for (std::size_t i = 0; i < n[0]; ++i) {
        const std::size_t s = g.flatIndex(i, j, k);
        nb.plus[0][s] = g.flatIndex((i + 1) % n[0], j, k);
        nb.minus[0][s] = g.flatIndex((i + n[0] - 1) % n[0], j, k);
        nb.plus[1][s] = g.flatIndex(i, (j + 1) % n[1], k);
        nb.minus[1][s] = g.flatIndex(i, (j + n[1] - 1) % n[1], k);
        nb.plus[2][s] = g.flatIndex(i, j, (k + 1) % n[2]);
        nb.minus[2][s] = g.flatIndex(i, j, (k + n[2] - 1) % n[2]);
      }
    }
  }
  return nb;
}

// Central difference along one axis, all coefficients.
std::vector<Multivector> partial(const MultivectorField& f, const Neighbours& nb, std::size_t axis) {
  const double inv = 1.0 / (2.0 * f.grid().spacing()[axis]);
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < f.size(); ++s) {
    out[s] = (f[nb.plus[axis][s]] - f[nb.minus[axis][s]]) * inv;
  }
  return out;
}

template <typename Weight>
double weightedNormSum(const MultivectorField& f, Weight weight) {
  std::vector<double> terms(f.size());
  for (std::size_t s = 0; s < f.size(); ++s) {
    terms[s] = weight(f.grid().position(s)) * squareNorm(f[s]);
  }
  return pairwiseSum(terms) * f.grid().cellVolume();
}

}  // namespace

double centeredOrigin(std::size_t n, double dx) {
  return -static_cast<double>(n / 2) * dx;
}

Grid3::Grid3(Counts3 n, Vec3 dx, Vec3 origin, Domain domain)
    : n_(n), dx_(dx), origin_(origin), domain_(domain) {
  for (std::size_t a = 0; a < 3; ++a) {
    if (n_[a] < 2) {
      throw ArgumentError("Grid3: axis " + std::to_string(a) + " needs at least 2 samples, got " +
                          std::to_string(n_[a]));
    }
    if (!(dx_[a] > 0.0) || !std::isfinite(dx_[a])) {
      throw ArgumentError("Grid3: spacing on axis " + std::to_string(a) +
                          " must be positive and finite");
    }
    if (!std::isfinite(origin_[a])) {
      throw ArgumentError("Grid3: origin on axis " + std::to_string(a) + " must be finite");
    }
    conjugateSpacing_[a] = kTwoPi / (static_cast<double>(n_[a]) * dx_[a]);
    conjugateOrigin_[a] = centeredOrigin(n_[a], conjugateSpacing_[a]);
  }
}

Grid3 Grid3::centered(Counts3 n, Vec3 dx, Domain domain) {
  Vec3 origin{};
  for (std::size_t a = 0; a < 3; ++a) origin[a] = centeredOrigin(n[a], dx[a]);
  return Grid3(n, dx, origin, domain);
}

Grid3 Grid3::cube(std::size_t n, double dx, Domain domain) {
  return centered({n, n, n}, {dx, dx, dx}, domain);
}

Vec3 Grid3::extent() const {
  return {static_cast<double>(n_[0]) * dx_[0], static_cast<double>(n_[1]) * dx_[1],
          static_cast<double>(n_[2]) * dx_[2]};
}

Vec3 Grid3::position(std::size_t flat) const {
  const Counts3 ijk = siteIndex(flat);
  return position(ijk[0], ijk[1], ijk[2]);
}

Counts3 Grid3::siteIndex(std::size_t flat) const {
  const std::size_t i = flat % n_[0];
  const std::size_t rest = flat / n_[0];
  return {i, rest % n_[1], rest / n_[1]};
}

Grid3 Grid3::conjugate() const {
  Grid3 g = *this;
  std::swap(g.dx_, g.conjugateSpacing_);
  std::swap(g.origin_, g.conjugateOrigin_);
  g.domain_ = domain_ == Domain::space ? Domain::frequency : Domain::space;
  return g;
}

Grid3 Grid3::withDomain(Domain domain) const {
  Grid3 g = *this;
  g.domain_ = domain;
  return g;
}

bool Grid3::sameLattice(const Grid3& other) const {
  return n_ == other.n_ && dx_ == other.dx_ && origin_ == other.origin_ &&
         domain_ == other.domain_;
}

MultivectorField::MultivectorField(const Grid3& grid)
    : grid_(grid), data_(grid.siteCount()) {}

MultivectorField::MultivectorField(const Grid3& grid, std::vector<Multivector> data)
    : grid_(grid), data_(std::move(data)) {
  if (data_.size() != grid_.siteCount()) {
    throw ArgumentError("MultivectorField: expected " + std::to_string(grid_.siteCount()) +
                        " sites, got " + std::to_string(data_.size()));
  }
}

ScalarField::ScalarField(const Grid3& grid) : grid_(grid), data_(grid.siteCount(), 0.0) {}

ScalarField::ScalarField(const Grid3& grid, std::vector<double> data)
    : grid_(grid), data_(std::move(data)) {
  if (data_.size() != grid_.siteCount()) {
    throw ArgumentError("ScalarField: expected " + std::to_string(grid_.siteCount()) +
                        " sites, got " + std::to_string(data_.size()));
  }
}

MultivectorField sample(const FieldExpression& expr, const Grid3& grid) {
  if (grid.domain() != Domain::space) throw ArgumentError("sample: grid must be a space grid");
  std::vector<Multivector> data(grid.siteCount());
  for (std::size_t s = 0; s < data.size(); ++s) data[s] = expr(grid.position(s));
  return MultivectorField(grid, std::move(data));
}

ScalarField sampleScalar(const ScalarExpression& expr, const Grid3& grid) {
  if (grid.domain() != Domain::space) throw ArgumentError("sampleScalar: grid must be a space grid");
  std::vector<double> data(grid.siteCount());
  for (std::size_t s = 0; s < data.size(); ++s) data[s] = expr(grid.position(s));
  return ScalarField(grid, std::move(data));
}

MultivectorField operator+(const MultivectorField& f, const MultivectorField& g) {
  requireSameLattice(f.grid(), g.grid(), "operator+");
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = f[s] + g[s];
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField operator-(const MultivectorField& f, const MultivectorField& g) {
  requireSameLattice(f.grid(), g.grid(), "operator-");
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = f[s] - g[s];
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField operator*(double s, const MultivectorField& f) {
  std::vector<Multivector> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * f[i];
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField pointwiseProduct(const MultivectorField& f, const MultivectorField& g) {
  requireSameLattice(f.grid(), g.grid(), "pointwiseProduct");
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = f[s] * g[s];
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField scale(const ScalarField& lambda, const MultivectorField& f) {
  requireSameLattice(lambda.grid(), f.grid(), "scale");
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = lambda[s] * f[s];
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField leftMultiply(const Multivector& m, const MultivectorField& f) {
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = m * f[s];
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField rightMultiply(const MultivectorField& f, const Multivector& m) {
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = f[s] * m;
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField mapSites(const MultivectorField& f,
                          const std::function<Multivector(const Vec3&, const Multivector&)>& fn) {
  std::vector<Multivector> out(f.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = fn(f.grid().position(s), f[s]);
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField roll(const MultivectorField& f, const std::array<long, 3>& shift) {
  const Grid3& g = f.grid();
  const auto& n = g.counts();
  auto wrap = [](long v, std::size_t m) {
    const long mm = static_cast<long>(m);
    return static_cast<std::size_t>(((v % mm) + mm) % mm);
  };
  std::vector<Multivector> out(f.size());
  for (std::size_t k = 0; k < n[2]; ++k) {
    for (std::size_t j = 0; j < n[1]; ++j) {
      for (std::size_t i = 0; i < n[0]; ++i) {
        const std::size_t si = wrap(static_cast<long>(i) - shift[0], n[0]);
        const std::size_t sj = wrap(static_cast<long>(j) - shift[1], n[1]);
        const std::size_t sk = wrap(static_cast<long>(k) - shift[2], n[2]);
        out[g.flatIndex(i, j, k)] = f.at(si, sj, sk);
      }
    }
  }
  return MultivectorField(g, std::move(out));
}

double maxAbsCoefficient(const MultivectorField& f) {
  double m = 0.0;
  for (const Multivector& v : f.data()) {
    for (std::size_t a = 0; a < kBladeCount; ++a) m = std::max(m, std::abs(v[a]));
  }
  return m;
}

double maxAbsDifference(const MultivectorField& f, const MultivectorField& g) {
  if (f.grid().counts() != g.grid().counts()) {
    throw ArgumentError("maxAbsDifference: fields have different sizes");
  }
  double m = 0.0;
  for (std::size_t s = 0; s < f.size(); ++s) {
    for (std::size_t a = 0; a < kBladeCount; ++a) m = std::max(m, std::abs(f[s][a] - g[s][a]));
  }
  return m;
}

void requireVector(const Multivector& a, const char* what) {
  if (!a.isVector()) throw ArgumentError(std::string(what) + ": direction must be a grade-1 vector");
}

MultivectorField directionalDiff(const MultivectorField& f, const Multivector& a) {
  requireVector(a, "directionalDiff");
  const Neighbours nb = neighbours(f.grid());
  std::vector<Multivector> out(f.size());
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const double w = a[1 + axis];
    const std::vector<Multivector> d = partial(f, nb, axis);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = out[s] + w * d[s];
  }
  return MultivectorField(f.grid(), std::move(out));
}

ScalarField directionalDiff(const ScalarField& f, const Multivector& a) {
  requireVector(a, "directionalDiff");
  const Neighbours nb = neighbours(f.grid());
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const double w = a[1 + axis] / (2.0 * f.grid().spacing()[axis]);
    for (std::size_t s = 0; s < out.size(); ++s) {
      out[s] += w * (f[nb.plus[axis][s]] - f[nb.minus[axis][s]]);
    }
  }
  return ScalarField(f.grid(), std::move(out));
}

MultivectorField vectorDerivative(const MultivectorField& f) {
  const Neighbours nb = neighbours(f.grid());
  std::vector<Multivector> out(f.size());
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const Multivector ek = Multivector::basis(static_cast<Blade>(1 + axis));
    const std::vector<Multivector> d = partial(f, nb, axis);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = out[s] + ek * d[s];
  }
  return MultivectorField(f.grid(), std::move(out));
}

MultivectorField laplacian(const MultivectorField& f) {
  const Neighbours nb = neighbours(f.grid());
  std::vector<Multivector> out(f.size());
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const double h = f.grid().spacing()[axis];
    const double inv = 1.0 / (h * h);
    for (std::size_t s = 0; s < out.size(); ++s) {
      out[s] = out[s] + (f[nb.plus[axis][s]] - 2.0 * f[s] + f[nb.minus[axis][s]]) * inv;
    }
  }
  return MultivectorField(f.grid(), std::move(out));
}

double pairwiseSum(std::span<const double> values) {
  constexpr std::size_t kBlock = 8;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwiseSum(values.first(half)) + pairwiseSum(values.subspan(half));
}

Multivector integrate(const MultivectorField& f) {
  Multivector::Coefficients total{};
  std::vector<double> column(f.size());
  for (std::size_t a = 0; a < kBladeCount; ++a) {
    for (std::size_t s = 0; s < f.size(); ++s) column[s] = f[s][a];
    total[a] = pairwiseSum(column) * f.grid().cellVolume();
  }
  return Multivector(total);
}

double integrate(const ScalarField& f) { return pairwiseSum(f.data()) * f.grid().cellVolume(); }

double energy(const MultivectorField& f) {
  return weightedNormSum(f, [](const Vec3&) { return 1.0; });
}

double weightedEnergyMoment(const MultivectorField& f, const Multivector& a) {
  requireVector(a, "weightedEnergyMoment");
  return weightedNormSum(f, [&a](const Vec3& x) {
    const double ax = a[1] * x[0] + a[2] * x[1] + a[3] * x[2];
    return ax * ax;
  });
}

double radialEnergyMoment(const MultivectorField& f) {
  return weightedNormSum(f, [](const Vec3& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; });
}

}  // namespace cl3
