#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class RelativeIriError : public Error {
public:
  explicit RelativeIriError(const std::string& iri)
      : Error("IRI is not absolute and no base is in scope: <" + iri + ">"), iri_(iri) {}
  const std::string& iri() const noexcept { return iri_; }

private:
  std::string iri_;
};

class EmptyTaskSignature : public Error {
public:
  EmptyTaskSignature() : Error("task signature is empty") {}
};

class EmptyCatalogue : public Error {
public:
  EmptyCatalogue() : Error("task catalogue is empty") {}
};

class UnknownTask : public Error {
public:
  explicit UnknownTask(const std::string& id) : Error("unknown task: " + id) {}
};

class InvalidCatalogue : public Error {
public:
  using Error::Error;
};

class DuplicateKgId : public Error {
public:
  explicit DuplicateKgId(const std::string& id) : Error("duplicate KG id in registry: " + id) {}
};

class DigestMismatch : public Error {
public:
  DigestMismatch(const std::string& path, const std::string& expected, const std::string& actual)
      : Error("digest mismatch for " + path + ": index says " + expected + ", file has " + actual) {}
};

class InvalidDocument : public Error {
public:
  using Error::Error;
};

}  // namespace aap
