#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ntiers {

/// Failure categories raised by parsing, transformation, and scaffolding.
/// The kebab-case names returned by to_string() are part of the CLI
/// diagnostics contract.
enum class errc {
  xml_malformed,
  schema_violation,
  validation_failed,
  unresolved_path,
  detached_element,
  kind_mismatch,
  invalid_model,
  invalid_input,
  missing_interface,
  inconsistent_view,
  generated_name_collision,
  io_failure,
  template_error,
};

std::string_view to_string(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ntiers
