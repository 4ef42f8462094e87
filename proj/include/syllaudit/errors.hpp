#pragma once

#include <stdexcept>
#include <string>

namespace syllaudit {

enum class ErrorCode {
  PathNotFound,
  EmptyCorpus,
  DuplicateId,
  ParseError,
  InvariantViolation,
  InvalidRecord,
  BackendUnavailable,
  AuthError,
  ReplayMiss,
  InsufficientOverlap,
  MixedRubrics,
  UnknownSyllabusId,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the whole library; the code drives the
// CLI exit-status mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace syllaudit
