#pragma once

#include <stdexcept>
#include <string>

namespace gxcat {

enum class ErrorKind {
  validation,  // input data violates an axiom or precondition
  usage,       // malformed arguments or files
  resource,    // a size guard was exceeded
  internal     // a post-condition failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::internal, what);
}

}  // namespace gxcat
