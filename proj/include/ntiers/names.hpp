#pragma once

#include <string>
#include <string_view>

namespace ntiers {

/// True when `text` is a letter followed by letters, digits, or underscores.
bool is_identifier(std::string_view text);

/// Identifiers whose first letter is uppercase; required of class names so
/// that concatenated generated names stay readable.
bool is_class_identifier(std::string_view text);

/// Uppercases exactly the first character, leaves the rest untouched.
std::string capitalize_first(std::string_view text);

/// ASCII lowercase copy, used for case-insensitive operation-name tokens.
std::string ascii_lower(std::string_view text);

}  // namespace ntiers
