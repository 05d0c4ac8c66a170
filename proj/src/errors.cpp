#include "reflective/errors.hpp"

namespace reflective {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorKind::NonIntegerSolution: return "NonIntegerSolution";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorKind kind, const std::string& message, const std::string& subsystem) {
  std::string out = to_string(kind);
  if (!subsystem.empty()) out += " in " + subsystem;
  return out + ": " + message;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::string subsystem)
    : std::runtime_error(compose(kind, message, subsystem)), kind_(kind), subsystem_(std::move(subsystem)), message_(message) {}

int Error::exit_code() const noexcept { return kind_ == ErrorKind::InvalidInput ? 2 : 3; }

}  // namespace reflective
