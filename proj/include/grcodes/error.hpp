#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed field, group, element or polynomial text. `position` is the
/// 0-based offset into the parsed string where the problem was detected.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An enumeration or search would exceed its configured budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A self-orthogonality certificate required by a construction does not hold.
class CertificateFailed : public Error {
public:
  using Error::Error;
};

} // namespace grcodes
