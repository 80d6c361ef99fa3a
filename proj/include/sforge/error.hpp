#pragma once

#include <stdexcept>
#include <string>

namespace sforge {

enum class ErrorCode {
  InvalidArgument = 1,  // malformed input: index out of range, bad label, zero vector
  Domain = 2,           // physically inadmissible: negative mass, massless boost, tachyonic shell
  Singular = 3,         // degenerate direction or singular matrix
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sforge
