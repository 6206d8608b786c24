#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " +
              what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class UnknownGenerator : public Error {
public:
  explicit UnknownGenerator(std::string name)
      : Error("unknown generator '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class InvalidGenerator : public Error {
public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
public:
  AlphabetMismatch() : Error("words are over different alphabets") {}
};

class InvalidGenus : public Error {
public:
  using Error::Error;
};

class TargetSourceMismatch : public Error {
public:
  TargetSourceMismatch()
      : Error("target of the first homomorphism is not the source of the "
              "second") {}
};

class InvalidHomomorphism : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class InvalidModulus : public Error {
public:
  using Error::Error;
};

class InsufficientDegrees : public Error {
public:
  using Error::Error;
};

class NotSurjective : public Error {
public:
  using Error::Error;
};

class RankTooSmall : public Error {
public:
  using Error::Error;
};

/// Raised by constructions whose input is outside the aspherical class.
class NotAspherical : public Error {
public:
  NotAspherical(std::string reason, const std::string& what)
      : Error(what), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

private:
  std::string reason_;
};

/// Malformed input file or text block (matrix, presentation, factorization).
class FormatError : public Error {
public:
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace sag
