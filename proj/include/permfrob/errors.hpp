#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permfrob {

/// Operands live in different rings (variable space or modulus disagree),
/// or a vector has the wrong length for the ring.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A product would exceed the ring's total-degree cap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// The requested criterion or method does not apply to the input
/// (e.g. Fedder's shortcut on an ideal not tagged as a complete intersection).
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace permfrob
