#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nphk {

enum class ErrorKind {
  Parse,
  Domain,
  NotCriticalAtOrigin,
  SingularMap,
  NormalizationFailed,
  TruncationTooSmall,
  Unsupported,
  QuadratureNotConverged,
  DegenerateFit,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Process exit status for the CLI: 2 bad input, 3 out-of-scope class,
// 4 numerical failure, 1 anything else.
int exit_code(ErrorKind kind);

}  // namespace nphk
