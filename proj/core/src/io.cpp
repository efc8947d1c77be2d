#include "cl3/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace cl3 {
namespace {

static_assert(std::numeric_limits<double>::is_iec559, "MVF3 stores IEEE-754 binary64");

template <typename U>
void putLittle(std::string& buf, U value) {
  for (std::size_t b = 0; b < sizeof(U); ++b) {
    buf.push_back(static_cast<char>((value >> (8 * b)) & 0xFFu));
  }
}

void putDouble(std::string& buf, double v) { putLittle(buf, std::bit_cast<std::uint64_t>(v)); }

template <typename U>
U getLittle(const unsigned char* p) {
  U value = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) value |= static_cast<U>(p[b]) << (8 * b);
  return value;
}

double getDouble(const unsigned char* p) { return std::bit_cast<double>(getLittle<std::uint64_t>(p)); }

// Reads exactly `count` bytes or reports how many arrived.
std::size_t readBytes(std::istream& in, unsigned char* dst, std::size_t count) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(count));
  return static_cast<std::size_t>(in.gcount());
}

std::string coordinateLabel(Domain d, std::size_t axis) {
  return (d == Domain::space ? "x" : "w") + std::to_string(axis + 1);
}

}  // namespace

std::string formatReal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void writeField(const MultivectorField& f, std::ostream& out) {
  const Grid3& g = f.grid();
  std::string header;
  header.reserve(kMvf3HeaderBytes);
  header.append(kMvf3Magic, 4);
  putLittle(header, kMvf3Version);
  header.push_back(static_cast<char>(g.domain()));
  for (std::size_t n : g.counts()) {
    if (n > std::numeric_limits<std::uint32_t>::max()) {
      throw ArgumentError("writeField: axis count does not fit in 32 bits");
    }
    putLittle(header, static_cast<std::uint32_t>(n));
  }
  for (double dx : g.spacing()) putDouble(header, dx);
  for (double o : g.origin()) putDouble(header, o);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));

  std::string payload;
  payload.reserve(f.size() * kBladeCount * 8);
  for (const Multivector& m : f.data()) {
    for (std::size_t a = 0; a < kBladeCount; ++a) putDouble(payload, m[a]);
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw std::runtime_error("writeField: write failed");
}

void writeField(const MultivectorField& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("writeField: cannot open " + path.string());
  writeField(f, out);
}

MultivectorField readField(std::istream& in, const WarningSink& sink) {
  unsigned char header[kMvf3HeaderBytes];
  const std::size_t got = readBytes(in, header, kMvf3HeaderBytes);
  if (got >= 4 && std::memcmp(header, kMvf3Magic, 4) != 0) {
    throw FormatError("readField: bad magic (not an MVF3 file)");
  }
  if (got < kMvf3HeaderBytes) {
    throw CorruptionError("readField: truncated header (" + std::to_string(got) + " of " +
                          std::to_string(kMvf3HeaderBytes) + " bytes)");
  }
  const auto version = getLittle<std::uint32_t>(header + 4);
  if (version != kMvf3Version) {
    throw FormatError("readField: unsupported version " + std::to_string(version));
  }
  const unsigned char domainTag = header[8];
  if (domainTag > 1) throw FormatError("readField: invalid domain tag " + std::to_string(domainTag));

  Counts3 n{};
  Vec3 dx{};
  Vec3 origin{};
  for (std::size_t a = 0; a < 3; ++a) {
    n[a] = getLittle<std::uint32_t>(header + 9 + 4 * a);
    dx[a] = getDouble(header + 21 + 8 * a);
    origin[a] = getDouble(header + 45 + 8 * a);
  }
  // Cap at 2^34 sites so the byte count cannot overflow.
  constexpr double kMaxSites = 17179869184.0;
  if (static_cast<double>(n[0]) * static_cast<double>(n[1]) * static_cast<double>(n[2]) > kMaxSites) {
    throw FormatError("readField: implausible lattice size");
  }
  const Grid3 grid = [&] {
    try {
      return Grid3(n, dx, origin, static_cast<Domain>(domainTag));
    } catch (const ArgumentError& e) {
      throw FormatError(std::string("readField: invalid grid: ") + e.what());
    }
  }();

  const std::size_t sites = grid.siteCount();
  const std::size_t payloadBytes = sites * kBladeCount * 8;
  std::vector<unsigned char> payload(payloadBytes);
  const std::size_t payloadGot = readBytes(in, payload.data(), payloadBytes);
  if (payloadGot != payloadBytes) {
    throw CorruptionError("readField: truncated payload (" + std::to_string(payloadGot) + " of " +
                          std::to_string(payloadBytes) + " bytes)");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw CorruptionError("readField: trailing bytes after payload");
  }

  std::vector<Multivector> data(sites);
  std::size_t nanCount = 0;
  for (std::size_t s = 0; s < sites; ++s) {
    Multivector::Coefficients c{};
    for (std::size_t a = 0; a < kBladeCount; ++a) {
      c[a] = getDouble(payload.data() + 8 * (s * kBladeCount + a));
      if (std::isnan(c[a])) ++nanCount;
    }
    data[s] = Multivector(c);
  }
  if (nanCount > 0) {
    warn(sink, "readField: " + std::to_string(nanCount) + " NaN coefficient(s) in payload");
  }
  return MultivectorField(grid, std::move(data));
}

MultivectorField readField(const std::filesystem::path& path, const WarningSink& sink) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("readField: cannot open " + path.string());
  return readField(in, sink);
}

CoefficientSelector parseCoefficientSelector(const std::string& text) {
  if (text == "norm2" || text == "squareNorm") return SquareNormSelector{};
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '7') {
    return static_cast<Blade>(text[0] - '0');
  }
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (text == kBladeName[i]) return static_cast<Blade>(i);
  }
  throw ArgumentError("unknown coefficient selector '" + text +
                      "' (use 0..7, a blade name such as e12, or norm2)");
}

std::string selectorName(const CoefficientSelector& selector) {
  if (std::holds_alternative<SquareNormSelector>(selector)) return "norm2";
  return std::string(kBladeName[index(std::get<Blade>(selector))]);
}

std::string exportSlice(const MultivectorField& f, std::size_t axis, std::size_t index,
                        const CoefficientSelector& selector) {
  const Grid3& g = f.grid();
  if (axis > 2) throw ArgumentError("exportSlice: axis must be 0, 1 or 2");
  if (index >= g.counts()[axis]) {
    throw ArgumentError("exportSlice: index " + std::to_string(index) + " out of range for axis " +
                        std::to_string(axis) + " (n = " + std::to_string(g.counts()[axis]) + ")");
  }
  const std::size_t u = axis == 0 ? 1 : 0;
  const std::size_t v = axis == 2 ? 1 : 2;

  std::ostringstream csv;
  csv << coordinateLabel(g.domain(), u) << ',' << coordinateLabel(g.domain(), v) << ','
      << selectorName(selector) << "\r\n";
  for (std::size_t jv = 0; jv < g.counts()[v]; ++jv) {
    for (std::size_t ju = 0; ju < g.counts()[u]; ++ju) {
      Counts3 ijk{};
      ijk[axis] = index;
      ijk[u] = ju;
      ijk[v] = jv;
      const Multivector& m = f.at(ijk[0], ijk[1], ijk[2]);
      const double value = std::holds_alternative<SquareNormSelector>(selector)
                               ? squareNorm(m)
                               : m[std::get<Blade>(selector)];
      csv << formatReal(g.coordinate(u, ju)) << ',' << formatReal(g.coordinate(v, jv)) << ','
          << formatReal(value) << "\r\n";
    }
  }
  return csv.str();
}

}  // namespace cl3
