#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tbsl {

enum class ErrorKind {
  Argument,
  KnotNotLink,
  OutOfScope,
  Unsupported,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Argument: return "argument";
    case ErrorKind::KnotNotLink: return "knot_not_link";
    case ErrorKind::OutOfScope: return "out_of_scope";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI) can map it to a stable machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::Argument, what);
}

}  // namespace tbsl
