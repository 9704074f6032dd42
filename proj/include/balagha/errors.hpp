#ifndef BALAGHA_ERRORS_HPP
#define BALAGHA_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace balagha {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The embedded catalogue violates its own invariants. Indicates a build defect.
class InternalDataCorrupt : public Error {
 public:
  using Error::Error;
};

class UnknownDevice : public Error {
 public:
  explicit UnknownDevice(std::string code)
      : Error("unknown device code '" + code + "'"), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class InvalidFilter : public Error {
 public:
  using Error::Error;
};

// Malformed document content. Syntax errors carry a 1-based line/column,
// schema errors carry the offending field path.
class FormatError : public Error {
 public:
  FormatError(std::string message, std::optional<std::size_t> line,
              std::optional<std::size_t> column, std::string field = {})
      : Error(std::move(message)),
        line_(line),
        column_(column),
        field_(std::move(field)) {}

  const std::optional<std::size_t>& line() const { return line_; }
  const std::optional<std::size_t>& column() const { return column_; }
  const std::string& field() const { return field_; }

 private:
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
  std::string field_;
};

class EncodingError : public Error {
 public:
  EncodingError(const std::string& message, std::size_t byte_offset)
      : Error(message), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class LexiconError : public Error {
 public:
  LexiconError(const std::string& message, std::size_t line)
      : Error("lexicon line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ZeroMorphemes : public Error {
 public:
  ZeroMorphemes() : Error("morpheme count is zero; density is undefined") {}
};

class EmptyScores : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace balagha

#endif  // BALAGHA_ERRORS_HPP
