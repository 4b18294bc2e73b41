#pragma once

#include <stdexcept>
#include <string>

namespace fuskit {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation, group file, or CLI argument.
struct parse_error : error {
  using error::error;
};

/// A configured size cap was hit; carries the cap name and value.
struct cap_exceeded : error {
  cap_exceeded(const std::string& cap_name, size_t cap_value, const std::string& what_arg)
      : error(what_arg + " (cap " + cap_name + " = " + std::to_string(cap_value) + ")"),
        cap(cap_name),
        value(cap_value) {}
  std::string cap;
  size_t value;
};

struct precondition_error : error {
  using error::error;
};

/// Raised when an internally cross-checked identity fails; always a bug,
/// never a valid outcome on well-formed inputs.
struct contradiction_error : error {
  contradiction_error(const std::string& what_arg, std::string diag = "")
      : error(what_arg), diagnostic(std::move(diag)) {}
  std::string diagnostic;
};

}  // namespace fuskit
