#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

enum class ErrorCode {
  invalid_argument,
  non_normalizable,   // stationary law requested for kappa >= 8
  horizon_exceeded,   // clock level beyond the simulated range
  divergent_region,   // series requested outside its disc of convergence
  pole,               // special function evaluated at a pole
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::non_normalizable: return "non_normalizable";
    case ErrorCode::horizon_exceeded: return "horizon_exceeded";
    case ErrorCode::divergent_region: return "divergent_region";
    case ErrorCode::pole: return "pole";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::invalid_argument, what);
}

}  // namespace loewner
