#pragma once

#include <stdexcept>
#include <string>

namespace beltrami {

enum class ErrorCode {
  kOutsideDisk = 1,
  kNearBoundary,
  kNoConvergence,
  kDegeneratePair,
  kInsufficientSamples,
  kCoincidentChords,
  kEqualDirections,
  kNonpositiveDistance,
  kDegenerateTriangle,
  kInvalidAngles,
  kAtIdealCenter,
  kInvalidArgument,
  kSchemaViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can map it to a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace beltrami
