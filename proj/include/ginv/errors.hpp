#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginv {

// Raised when text input does not match the expected grammar.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// A computed inverse failed its own defining equations. Unreachable for
// valid inputs; signals a bug in the computation path.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// A cross-formula identity that must hold was violated.
class TheoremError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace ginv
