#ifndef CONICLINE_ERROR_HPP
#define CONICLINE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace conicline {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands over different base fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, inexact division requested as exact, singular matrix,
/// nonprime characteristic, characteristic-2 rejection, and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A bounded search (chain standardization, subduction) ran out of budget.
class SearchCapError : public Error {
 public:
  using Error::Error;
};

class CurveError : public Error {
 public:
  enum class Kind { ZeroTriple, ConstantMap, ImageMeetsQ0 };

  CurveError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::ZeroTriple: return "ZERO_TRIPLE";
      case Kind::ConstantMap: return "CONSTANT_MAP";
      case Kind::ImageMeetsQ0: return "IMAGE_MEETS_Q0";
    }
    return "UNKNOWN";
  }

 private:
  Kind kind_;
};

}  // namespace conicline

#endif
