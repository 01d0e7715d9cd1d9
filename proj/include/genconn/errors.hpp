#pragma once

#include <stdexcept>
#include <string>

namespace genconn {

enum class ErrorCode {
  incompatible_group,
  broken_path,
  unknown_generator,
  unknown_vertex,
  non_composable,
  graph_mismatch,
  no_geometry,
  unsupported_group,
  not_closed,
  unsupported_exact,
  budget_exceeded,
  parse_error,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace genconn
