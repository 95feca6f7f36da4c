#pragma once

#include <stdexcept>
#include <string>

namespace foliate {

/// A precondition on a mathematical input was violated. `code()` is a short
/// dotted identifier (e.g. "resolution.not_coprime") suitable for scripts.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::domain_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// The available criteria do not decide the question for this input.
class IndeterminateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual or JSON input (bad syntax, missing fields).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace foliate
