#include "ntiers/error.hpp"

namespace ntiers {

std::string_view to_string(errc code) {
  switch (code) {
    case errc::xml_malformed: return "xml-malformed";
    case errc::schema_violation: return "schema-violation";
    case errc::validation_failed: return "validation-failed";
    case errc::unresolved_path: return "unresolved-path";
    case errc::detached_element: return "detached-element";
    case errc::kind_mismatch: return "kind-mismatch";
    case errc::invalid_model: return "invalid-model";
    case errc::invalid_input: return "invalid-input";
    case errc::missing_interface: return "missing-interface";
    case errc::inconsistent_view: return "inconsistent-view";
    case errc::generated_name_collision: return "generated-name-collision";
    case errc::io_failure: return "io-failure";
    case errc::template_error: return "template-error";
  }
  return "unknown";
}

}  // namespace ntiers
