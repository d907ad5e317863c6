#pragma once

#include <stdexcept>
#include <string>

namespace quivhom {

enum class ErrorKind {
  kInput,         // malformed or inconsistent user input
  kContract,      // caller violated an operation contract (dimension mismatch etc.)
  kPrecondition,  // mathematical precondition not met (e.g. not stably idempotent)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) { throw Error(ErrorKind::kInput, msg); }
[[noreturn]] inline void throw_contract(const std::string& msg) { throw Error(ErrorKind::kContract, msg); }
[[noreturn]] inline void throw_precondition(const std::string& msg) { throw Error(ErrorKind::kPrecondition, msg); }

}  // namespace quivhom
