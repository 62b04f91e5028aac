#pragma once

#include <stdexcept>
#include <string>

namespace matchcx {

enum class ErrorCode {
  InvalidParameter,
  Precondition,
  SizeLimit,
  Resource,
  Parse,
  Io,
  Inconsistent,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when enumerating faces would exceed the configured face budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, int dimension)
      : Error(ErrorCode::Resource, what), dimension_(dimension) {}
  int dimension() const noexcept { return dimension_; }

 private:
  int dimension_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace matchcx
