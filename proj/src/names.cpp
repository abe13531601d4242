#include "ntiers/names.hpp"

#include <cctype>

namespace ntiers {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_word(char c) { return c == '_' || std::isalnum(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool is_identifier(std::string_view text) {
  if (text.empty() || !is_alpha(text.front())) return false;
  for (char c : text.substr(1)) {
    if (!is_word(c)) return false;
  }
  return true;
}

bool is_class_identifier(std::string_view text) {
  return is_identifier(text) && std::isupper(static_cast<unsigned char>(text.front())) != 0;
}

std::string capitalize_first(std::string_view text) {
  std::string result(text);
  if (!result.empty()) {
    result.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(result.front())));
  }
  return result;
}

std::string ascii_lower(std::string_view text) {
  std::string result(text);
  for (char& c : result) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return result;
}

}  // namespace ntiers
