#pragma once

#include <stdexcept>
#include <string>

namespace reflective {

enum class ErrorKind {
  InvalidInput,
  InconsistentSystem,
  NonUniqueSolution,
  NonIntegerSolution,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Base error for everything the library throws on purpose. `subsystem`
/// names the linear system or stratum the failure belongs to, when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string subsystem = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subsystem() const noexcept { return subsystem_; }
  /// The message without the kind/subsystem prefix.
  const std::string& message() const noexcept { return message_; }

  /// 2 for malformed input, 3 for a detected mathematical inconsistency.
  int exit_code() const noexcept;

 private:
  ErrorKind kind_;
  std::string subsystem_;
  std::string message_;
};

inline Error invalid_input(const std::string& message) {
  return Error(ErrorKind::InvalidInput, message);
}

}  // namespace reflective
