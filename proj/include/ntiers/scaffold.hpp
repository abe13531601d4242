#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ntiers/fragment_path.hpp"
#include "ntiers/psm.hpp"

namespace ntiers::scaffold {

/// The templated element kinds. Every kind always has a template: defaults
/// are built in and a template directory overrides them per kind.
enum class Kind { Pojo, Dao, DaoImpl, Dto, Service, ServiceImpl, Jsp, Config };

inline constexpr std::size_t kind_count = 8;

std::string_view to_string(Kind kind);

/// Plain-text templates with {name}, {package}, {attributes}, {methods},
/// and {interface} placeholders. Which placeholders resolve depends on the
/// element kind; an unresolvable one raises Error(errc::template_error).
class TemplateSet {
 public:
  /// Syntax-neutral stub templates: declaration header plus the element's
  /// attribute or method listing as comment lines.
  static TemplateSet defaults();

  /// Starts from defaults, then replaces the template of every kind for
  /// which `dir` contains a "<kind>.template" file. Throws
  /// Error(errc::io_failure) when dir is not a readable directory.
  static TemplateSet load(const std::filesystem::path& dir);

  const std::string& text(Kind kind) const;
  void set(Kind kind, std::string text);

 private:
  std::array<std::string, kind_count> texts_;
};

struct ScaffoldEntry {
  std::string path;     // relative to the output directory, '/'-separated
  FragmentPath source;  // the element the file was generated from
  std::size_t size = 0;

  bool operator==(const ScaffoldEntry&) const = default;
};

/// Entries in emission order: data-access files (dao, pojo, daoimpl),
/// business files (services, serviceimpl, dto), view pages, and the
/// controller configuration last.
struct ScaffoldManifest {
  std::vector<ScaffoldEntry> entries;

  bool operator==(const ScaffoldManifest&) const = default;
};

/// One entry per line, tab-separated: path, source path, byte length.
std::string format_manifest(const ScaffoldManifest& manifest);

/// Writes one stub file per templated element under dao/, business/, and
/// view/, plus one controller configuration file at the root, and returns
/// the manifest. Deterministic: re-running on the same model rewrites
/// identical bytes. Throws ValidationError(errc::invalid_model) for a model
/// that fails validation, Error(errc::template_error) for unresolvable
/// placeholders, and Error(errc::io_failure) for filesystem failures.
ScaffoldManifest emit_scaffold(const psm::Model& model, const TemplateSet& templates,
                               const std::filesystem::path& out_dir);

}  // namespace ntiers::scaffold
