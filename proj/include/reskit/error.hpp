#pragma once

#include <stdexcept>
#include <string>

namespace reskit {

// Error taxonomy mirrored by the CLI exit codes:
// malformed input -> 2, violated precondition -> 3.
enum class ErrorKind { malformed_input, precondition };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
  throw Error(ErrorKind::malformed_input, msg);
}

[[noreturn]] inline void fail_pre(const std::string& msg) {
  throw Error(ErrorKind::precondition, msg);
}

inline void require_input(bool ok, const std::string& msg) {
  if (!ok) fail_input(msg);
}

inline void require_pre(bool ok, const std::string& msg) {
  if (!ok) fail_pre(msg);
}

}  // namespace reskit
