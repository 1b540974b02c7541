#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steiner {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (table files, identity strings).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A value failed the structural invariants of its type (Latin square,
/// identity element, pair coverage...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain. `code` is a short stable
/// token ("not-steiner", "collinear", ...) so callers can tell causes apart.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : Error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace steiner
