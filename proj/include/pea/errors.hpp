#pragma once

#include <stdexcept>
#include <string>

namespace pea {

/// Bad user input: an invalid algebra, an element that is not central where
/// a central one is required, an unknown class name, and so on.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table whose indices do not fit its declared element count.
class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A search or construction exceeded its configured bound.
class ResourceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A structural theorem about pseudo-effect algebras failed on a concrete
/// input. Valid inputs never produce this; it always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pea
