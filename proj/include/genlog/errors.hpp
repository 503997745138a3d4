#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genlog {

/// Malformed query text. `position` is a byte offset into the input;
/// position == input length means the error is at end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed dataset / prior document. Messages name the offending row.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work that would exceed a configured cap (world enumeration, premise count).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genlog
