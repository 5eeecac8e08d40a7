#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resistnet {

/// Failure kinds raised by the library. Each maps onto one CLI exit code.
enum class Errc {
  IndexOutOfRange,
  NonPositiveResistance,
  SelfLoop,
  SameNode,
  Disconnected,
  MultipleZeroModes,
  SingularReducedSystem,
  OutOfRange,
  QuadratureFailure,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonPositiveResistance: return "NonPositiveResistance";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::SameNode: return "SameNode";
    case Errc::Disconnected: return "Disconnected";
    case Errc::MultipleZeroModes: return "MultipleZeroModes";
    case Errc::SingularReducedSystem: return "SingularReducedSystem";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::QuadratureFailure: return "QuadratureFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// CLI exit codes: 2 parse/invalid input, 3 disconnected, 4 range, 5 numeric.
constexpr int exit_code(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::NonPositiveResistance:
    case Errc::SelfLoop:
      return 2;
    case Errc::Disconnected:
      return 3;
    case Errc::IndexOutOfRange:
    case Errc::SameNode:
    case Errc::OutOfRange:
      return 4;
    case Errc::MultipleZeroModes:
    case Errc::SingularReducedSystem:
    case Errc::QuadratureFailure:
      return 5;
  }
  return 1;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace resistnet
