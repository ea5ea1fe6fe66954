#pragma once

#include <stdexcept>
#include <string>

namespace critconf {

enum class ErrorCode {
  InvalidInput,   // schema or precondition violation
  UndefinedCase,  // the geometry is undefined there (fiber is a line, center, ...)
};

/// Engine error. `locus` names the offending item (e.g. "points[3]") when known.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& message, std::string locus = {})
      : std::runtime_error(message), code_(code), locus_(std::move(locus)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& locus() const noexcept { return locus_; }

 private:
  ErrorCode code_;
  std::string locus_;
};

[[noreturn]] inline void invalid_input(const std::string& message, std::string locus = {}) {
  throw GeometryError(ErrorCode::InvalidInput, message, std::move(locus));
}

[[noreturn]] inline void undefined_case(const std::string& message, std::string locus = {}) {
  throw GeometryError(ErrorCode::UndefinedCase, message, std::move(locus));
}

}  // namespace critconf
