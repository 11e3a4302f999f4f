#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group elements of different rank were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined at this argument (e.g. negating infinity, dividing by zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Residue requested for an element outside the valuation ring.
class NotIntegralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A relation whose left-hand side is not larger than some right-hand word.
class NonTerminatingError : public Error {
 public:
  using Error::Error;
};

class UnknownConstantError : public Error {
 public:
  using Error::Error;
};

class StepLimitError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class NotALatticeError : public Error {
 public:
  using Error::Error;
};

/// Element of F_NA required past the degree bound of a reductor.
class DegreeOverflowError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InconclusiveError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The normal form of an O_v-word has a coefficient outside O_v, so
/// pi(O_v<X>) cannot be an F-reductor candidate.
class CoefficientEscape : public Error {
 public:
  CoefficientEscape(int degree, std::string word)
      : Error("CoefficientEscape(degree=" + std::to_string(degree) + ", word=" + word + ")"),
        degree_(degree),
        word_(std::move(word)) {}
  int degree() const noexcept { return degree_; }
  const std::string& word() const noexcept { return word_; }

 private:
  int degree_;
  std::string word_;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::size_t line, std::string field)
      : Error("config line " + std::to_string(line) + (field.empty() ? "" : " [" + field + "]") +
              ": " + what),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class UnknownCheckError : public Error {
 public:
  using Error::Error;
};

class UnknownExampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace valred
