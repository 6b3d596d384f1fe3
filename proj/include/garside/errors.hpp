#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad word syntax, unknown atom, bad structure selector.
class InputError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit InputError(const std::string& what, std::size_t position = npos)
      : Error(what), position_(position) {}

  /// Byte offset into the offending text, or npos when not applicable.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands built over different Garside structures.
class StructureMismatch : public Error {
 public:
  using Error::Error;
};

/// A search cap (steps or set size) was hit before an answer was certain.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Mathematically invalid request: non-commuting tuple, non-primitive vector...
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace garside
