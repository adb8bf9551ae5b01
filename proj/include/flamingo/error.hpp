#pragma once

#include <stdexcept>
#include <string>

namespace flamingo {

enum class ErrorKind {
  kInvalidParameters,
  kSizeMismatch,
  kBlockTooSmall,
  kColumnCollision,
  kZeroPolynomial,
  kDegreeMismatch,
  kConstraintViolation,
  kNoCrossing,
  kUnsupportedShape,
  kUnknownFormat,
  kParse,
};

const char* to_string(ErrorKind kind);

// Every precondition failure in the library is reported through this type.
class Error : public std::invalid_argument {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flamingo
