#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covermeasure {

enum class ErrorCode {
  InvalidRank,
  InvalidGraph,
  InvalidArgument,
  InvalidSampleCount,
  SymmetryViolation,
  Divergent,
  InfeasibleGeometry,
  EmptyEnsemble,
  Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` lets
/// callers (the CLI in particular) map failures without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covermeasure
