#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlsp {

enum class ErrorCode {
  kLoopEdge,
  kDuplicateEdge,
  kWeightOutOfRange,
  kUnknownLayer,
  kUnknownNode,
  kTooManyLayers,
  kSameNode,
  kInvalidAlpha,
  kInvalidBeta,
  kSizeGuardExceeded,
  kInconsistentInput,
  kParseError,
  kEmptyFile,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported as an Error carrying a machine-readable
/// code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlsp
