#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ntiers::xml {

/// One parsed element. Attributes keep document order.
struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;
  std::size_t line = 0;

  /// Pointer to the value of the named attribute, or nullptr when absent.
  const std::string* attr(std::string_view name) const;
};

/// Parses a standalone document: an optional XML declaration, comments, and
/// exactly one root element. Doctype declarations, CDATA sections, and
/// processing instructions other than the declaration are rejected.
/// Throws Error(errc::xml_malformed) with the offending line number.
Element parse_document(std::string_view text);

/// Escapes &, <, >, and " for use inside a double-quoted attribute value.
std::string escape_attribute(std::string_view value);

}  // namespace ntiers::xml
