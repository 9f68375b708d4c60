#pragma once

#include <stdexcept>
#include <string>

namespace harmodisk {

enum class ErrorKind {
  invalid_argument,
  invalid_boundary_data,
  branch_cut,
  out_of_domain,
  region,
  aliasing,
  overflow,
  expansion_unsupported,
  io,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace harmodisk
