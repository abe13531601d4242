#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntiers/pim.hpp"
#include "ntiers/psm.hpp"

namespace ntiers::io {

inline constexpr std::string_view pim_root_element = "UmlMM:UmlPackage";
inline constexpr std::string_view psm_root_element = "NtiersMM:CrudProjectPackage";
inline constexpr std::string_view pim_namespace = "http://UmlMM.ecore";
inline constexpr std::string_view psm_namespace = "http://NtiersMM.ecore";
inline constexpr std::string_view xmi_namespace = "http://www.omg.org/XMI";

/// Reads a source-model document. The result is sealed and already
/// validated. Throws Error(errc::xml_malformed) on bad XML,
/// Error(errc::schema_violation) on unknown elements or attributes, and
/// ValidationError(errc::validation_failed) when the model breaks
/// well-formedness rules.
pim::Model parse_pim(std::string_view document);

struct SerializeOptions {
  /// When set, attribute and method declarations are emitted as nested
  /// elements under pojo, dto, dao, and services. When cleared the
  /// name-only shape is produced (the --fig9-compat CLI mode).
  bool full = true;
};

/// Writes a target-model document. Byte-deterministic: equal models yield
/// identical text. Reference attributes are fragment paths computed from
/// actual element positions. Throws ValidationError(errc::invalid_model)
/// when the model does not validate.
std::string serialize_psm(const psm::Model& model, SerializeOptions options = {});

/// Reads a target-model document, resolving every reference attribute.
/// Accepts both the full and the name-only shapes. Throws
/// Error(errc::xml_malformed), Error(errc::schema_violation), or
/// Error(errc::unresolved_path) for dangling or ill-typed references.
psm::Model parse_psm(std::string_view document);

enum class ModelKind { Pim, Psm };

/// Identifies a document by its root element name. Throws
/// Error(errc::schema_violation) for any other root.
ModelKind sniff_kind(std::string_view document);

enum class DiffKind { Added, Removed, Renamed, Relinked };

std::string_view to_string(DiffKind kind);

/// One structural discrepancy. `path` addresses the affected element in the
/// left model, except for Added entries where it addresses the right model.
/// Scalar field changes (an attribute's type, a parameter's direction)
/// count as Relinked: the element points at a different classifier.
struct DiffEntry {
  DiffKind kind;
  std::string path;
  std::string detail;
};

struct StructuralDiff {
  std::vector<DiffEntry> entries;

  bool empty() const { return entries.empty(); }
};

struct DiffOptions {
  /// Order-sensitive mode pairs elements of a feature positionally and
  /// compares links by target path. Order-insensitive mode pairs them by
  /// name and compares links by target feature and name.
  bool order_sensitive = true;
};

StructuralDiff diff(const pim::Model& a, const pim::Model& b, DiffOptions options = {});
StructuralDiff diff(const psm::Model& a, const psm::Model& b, DiffOptions options = {});

/// Parses both documents and diffs them. Throws Error(errc::kind_mismatch)
/// when the root elements disagree.
StructuralDiff diff_documents(std::string_view a, std::string_view b, DiffOptions options = {});

/// One line per entry: "kind path detail".
std::string format_diff(const StructuralDiff& diff);

}  // namespace ntiers::io
