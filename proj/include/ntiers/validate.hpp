#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntiers/error.hpp"
#include "ntiers/fragment_path.hpp"

namespace ntiers {

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::Error;
  FragmentPath path;
  std::string code;  // stable kebab-case identifier
  std::string message;
};

/// Violations are data, not failures: an empty report means the model is
/// valid, and validating never modifies the model.
struct ValidationReport {
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

namespace diag {
inline constexpr const char* invalid_identifier = "invalid-identifier";
inline constexpr const char* duplicate_classifier_name = "duplicate-classifier-name";
inline constexpr const char* duplicate_attribute_name = "duplicate-attribute-name";
inline constexpr const char* duplicate_operation_name = "duplicate-operation-name";
inline constexpr const char* duplicate_parameter_name = "duplicate-parameter-name";
inline constexpr const char* unresolved_type_ref = "unresolved-type-ref";
inline constexpr const char* duplicate_name = "duplicate-name";
inline constexpr const char* unresolved_ref = "unresolved-ref";
inline constexpr const char* asymmetric_link = "asymmetric-link";
inline constexpr const char* dto_pojo_mismatch = "dto-pojo-mismatch";
inline constexpr const char* naming_convention = "naming-convention";
}  // namespace diag

/// Checks source-model well-formedness: identifier discipline, name
/// uniqueness, and classifier reference resolution.
ValidationReport validate_pim(const pim::Model& model);

/// Checks target-model well-formedness: in-range references, bidirectional
/// link symmetry, per-feature name uniqueness, naming conventions, and
/// dto/pojo attribute equality.
ValidationReport validate_psm(const psm::Model& model);

/// Raised by operations whose precondition is an empty validation report;
/// carries the offending report.
class ValidationError : public Error {
 public:
  ValidationError(errc code, ValidationReport report, const std::string& message)
      : Error(code, message), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace ntiers
