#ifndef SKEMBED_ERRORS_HPP
#define SKEMBED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skembed {

// Machine-readable failure codes, mirrored into the CLI's error JSON.
enum class ErrorCode {
  InvalidArgument,
  NonIntegrableMean,
  QuadratureFailure,
  MeanNotZero,
  UnboundedValue,
  OutsideDisk,
  SingularityUnresolved,
  NotSymmetric,
  NotStarlike,
  PathBudgetExceeded,
  DistanceQueryFailure,
  InsufficientTail,
  WindowMismatch,
  DerivativeVanishes,
  VerticalTangent,
  EdgeSingularity,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace skembed

#endif  // SKEMBED_ERRORS_HPP
