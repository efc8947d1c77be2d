#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cl3 {

// Invalid argument to a math operation (wrong grade, wrong domain, bad size).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Spectral derivative order outside the supported range.
class UnsupportedOrderError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Structurally invalid MVF3 file (magic, version, domain tag).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// MVF3 payload shorter or longer than the header announces.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Receives non-fatal diagnostics. An empty sink discards them.
using WarningSink = std::function<void(std::string_view)>;

inline void warn(const WarningSink& sink, std::string_view message) {
  if (sink) sink(message);
}

}  // namespace cl3
