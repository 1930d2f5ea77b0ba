#pragma once

#include <stdexcept>
#include <string>

namespace roofcalc {

enum class ErrorKind {
  InvalidRank,
  InvalidWeight,
  NotGloballyGenerated,
  IncompatibleRank,
  IncompatibleAmbient,
  PlethysmRequired,
  Precondition,
  Ambiguity,
  InjectivityViolation,
  ExcludedCase,
  MalformedContraction,
  UnsupportedRender,
  Inconsistent,
  Parse,
  Mismatch,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace roofcalc
