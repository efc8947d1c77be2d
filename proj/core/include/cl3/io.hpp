#pragma once

// MVF3 binary field files and CSV slice export.
//
// MVF3 layout, all little-endian, no padding:
//
//   offset  size  content
//        0     4  magic "MVF3"
//        4     4  u32 version = 1
//        8     1  u8 domain (0 = space, 1 = frequency)
//        9    12  u32 n[3]
//       21    24  f64 dx[3]
//       45    24  f64 origin[3]
//       69     -  n0 n1 n2 sites x 8 f64 coefficients, x-fastest, basis
//                 order {1, e1, e2, e3, e12, e31, e23, e123}
//
// Reading is bit-exact: NaN payloads and signed zeros survive a round trip.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "cl3/errors.hpp"
#include "cl3/field.hpp"

namespace cl3 {

inline constexpr char kMvf3Magic[4] = {'M', 'V', 'F', '3'};
inline constexpr std::uint32_t kMvf3Version = 1;
inline constexpr std::size_t kMvf3HeaderBytes = 69;

// A frequency-domain file does not record the space lattice its spectrum was
// taken from; on read the conjugate lattice is the centered one.
void writeField(const MultivectorField& f, std::ostream& out);
void writeField(const MultivectorField& f, const std::filesystem::path& path);

// Throws FormatError for a bad magic, version or domain tag, CorruptionError
// for a truncated or over-long payload. NaN coefficients are reported
// through `sink` and kept.
MultivectorField readField(std::istream& in, const WarningSink& sink = {});
MultivectorField readField(const std::filesystem::path& path, const WarningSink& sink = {});

// Either one basis coefficient or the square norm.
struct SquareNormSelector {};
using CoefficientSelector = std::variant<Blade, SquareNormSelector>;

// Accepts a coefficient index "0".."7", a blade name ("1", "e1", ..., "e123"),
// or "norm2" / "squareNorm". Throws ArgumentError otherwise.
CoefficientSelector parseCoefficientSelector(const std::string& text);
std::string selectorName(const CoefficientSelector& selector);

// CSV of the plane {axis = index}: a header, then one row per site with the
// two in-plane coordinates (ascending axis order) and the selected value.
// Rows run with the lower in-plane axis fastest. Numbers use 17 significant
// digits. Throws ArgumentError for axis > 2 or index >= n[axis].
std::string exportSlice(const MultivectorField& f, std::size_t axis, std::size_t index,
                        const CoefficientSelector& selector);

// printf("%.17g"), the text form used for every number the tools print.
std::string formatReal(double v);

}  // namespace cl3
