#pragma once

#include <stdexcept>
#include <string>

namespace normcat {

/// Error taxonomy used across the library.
///  - Validation: input data violates a structural invariant
///  - Shape:      two values that must live over the same shape do not
///  - Size:       an enumeration exceeded its configured cap
///  - Input:      malformed external input (JSON, files)
enum class ErrorKind { Validation, Shape, Size, Input };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrorKind::Validation, msg);
}
[[noreturn]] inline void fail_shape(const std::string& msg) {
  throw Error(ErrorKind::Shape, msg);
}
[[noreturn]] inline void fail_size(const std::string& msg) {
  throw Error(ErrorKind::Size, msg);
}
[[noreturn]] inline void fail_input(const std::string& msg) {
  throw Error(ErrorKind::Input, msg);
}

} // namespace normcat
