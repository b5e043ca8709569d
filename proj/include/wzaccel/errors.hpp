#pragma once

#include <stdexcept>
#include <string>

namespace wzaccel {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes (see ExitCode in cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

class VariableMismatch : public Error {
 public:
  explicit VariableMismatch(const std::string& what)
      : Error("variable mismatch: " + what) {}
};

class NonIntegerSubstitution : public Error {
 public:
  explicit NonIntegerSubstitution(const std::string& what)
      : Error("non-integer substitution: " + what) {}
};

class NotSimilarPair : public Error {
 public:
  explicit NotSimilarPair(const std::string& what = "terms are not similar")
      : Error(what) {}
};

class ZeroTerm : public Error {
 public:
  explicit ZeroTerm(const std::string& what = "term is identically zero")
      : Error(what) {}
};

class NoHypergeometricAntidifference : public Error {
 public:
  NoHypergeometricAntidifference()
      : Error("no hypergeometric antidifference exists") {}
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& what) : Error(what) {}
};

class UndefinedTerm : public Error {
 public:
  explicit UndefinedTerm(const std::string& what) : Error(what) {}
};

class NoConvergenceDetected : public Error {
 public:
  explicit NoConvergenceDetected(const std::string& what) : Error(what) {}
};

class Inapplicable : public Error {
 public:
  explicit Inapplicable(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace wzaccel
