#include "ntiers/xml.hpp"

#include <cctype>
#include <charconv>

#include "ntiers/error.hpp"

namespace ntiers::xml {

const std::string* Element::attr(std::string_view name) const {
  for (const auto& [key, value] : attributes) {
    if (key == name) return &value;
  }
  return nullptr;
}

namespace {

constexpr int max_depth = 200;

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(errc::xml_malformed, "line " + std::to_string(line_) + ": " + message);
  }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  bool lookahead(std::string_view token) const { return text_.substr(pos_).starts_with(token); }

  bool consume(std::string_view token) {
    if (!lookahead(token)) return false;
    for (std::size_t i = 0; i < token.size(); ++i) take();
    return true;
  }

  void expect(char c, const char* what) {
    if (eof() || peek() != c) fail(std::string("expected ") + what);
    take();
  }

  void skip_whitespace() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

void append_utf8(std::string& out, unsigned long code_point) {
  if (code_point < 0x80) {
    out.push_back(static_cast<char>(code_point));
  } else if (code_point < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (code_point >> 6)));
    out.push_back(static_cast<char>(0x80 | (code_point & 0x3F)));
  } else if (code_point < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (code_point >> 12)));
    out.push_back(static_cast<char>(0x80 | ((code_point >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (code_point & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (code_point >> 18)));
    out.push_back(static_cast<char>(0x80 | ((code_point >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((code_point >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (code_point & 0x3F)));
  }
}

// Cursor sits just past '&'. Appends the referenced character to `out`.
void append_entity(Cursor& cursor, std::string& out) {
  std::string entity;
  while (!cursor.eof() && cursor.peek() != ';') {
    entity.push_back(cursor.take());
    if (entity.size() > 8) cursor.fail("unterminated entity reference");
  }
  if (cursor.eof()) cursor.fail("unterminated entity reference");
  cursor.take();
  if (entity == "lt") {
    out.push_back('<');
  } else if (entity == "gt") {
    out.push_back('>');
  } else if (entity == "amp") {
    out.push_back('&');
  } else if (entity == "quot") {
    out.push_back('"');
  } else if (entity == "apos") {
    out.push_back('\'');
  } else if (!entity.empty() && entity[0] == '#') {
    std::string_view digits = std::string_view(entity).substr(1);
    int base = 10;
    if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
      base = 16;
      digits.remove_prefix(1);
    }
    unsigned long value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
    if (ec != std::errc() || end != digits.data() + digits.size() || value == 0 || value > 0x10FFFF) {
      cursor.fail("invalid numeric character reference \"&" + entity + ";\"");
    }
    append_utf8(out, value);
  } else {
    cursor.fail("unknown entity \"&" + entity + ";\"");
  }
}

std::string parse_name(Cursor& cursor) {
  if (cursor.eof() || !is_name_start(cursor.peek())) cursor.fail("expected a name");
  std::string name;
  name.push_back(cursor.take());
  while (!cursor.eof() && is_name_char(cursor.peek())) name.push_back(cursor.take());
  return name;
}

std::string parse_attribute_value(Cursor& cursor) {
  if (cursor.eof() || (cursor.peek() != '"' && cursor.peek() != '\'')) {
    cursor.fail("expected a quoted attribute value");
  }
  const char quote = cursor.take();
  std::string value;
  for (;;) {
    if (cursor.eof()) cursor.fail("unterminated attribute value");
    const char c = cursor.peek();
    if (c == quote) {
      cursor.take();
      return value;
    }
    if (c == '<') cursor.fail("'<' is not allowed in attribute values");
    if (c == '&') {
      cursor.take();
      append_entity(cursor, value);
      continue;
    }
    value.push_back(cursor.take());
  }
}

void skip_comment(Cursor& cursor) {
  cursor.consume("<!--");
  while (!cursor.consume("-->")) {
    if (cursor.eof()) cursor.fail("unterminated comment");
    cursor.take();
  }
}

void trim(std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
}

Element parse_element(Cursor& cursor, int depth) {
  if (depth > max_depth) cursor.fail("element nesting too deep");
  Element element;
  element.line = cursor.line();
  cursor.expect('<', "'<'");
  element.name = parse_name(cursor);

  for (;;) {
    cursor.skip_whitespace();
    if (cursor.eof()) cursor.fail("unterminated start tag for <" + element.name + ">");
    if (cursor.consume("/>")) return element;
    if (cursor.consume(">")) break;
    std::string attr_name = parse_name(cursor);
    cursor.skip_whitespace();
    cursor.expect('=', "'=' after attribute name");
    cursor.skip_whitespace();
    std::string value = parse_attribute_value(cursor);
    if (element.attr(attr_name) != nullptr) {
      cursor.fail("duplicate attribute \"" + attr_name + "\" on <" + element.name + ">");
    }
    element.attributes.emplace_back(std::move(attr_name), std::move(value));
  }

  for (;;) {
    if (cursor.eof()) cursor.fail("missing end tag for <" + element.name + ">");
    if (cursor.consume("</")) {
      const std::string end_name = parse_name(cursor);
      if (end_name != element.name) {
        cursor.fail("end tag </" + end_name + "> does not match <" + element.name + ">");
      }
      cursor.skip_whitespace();
      cursor.expect('>', "'>'");
      trim(element.text);
      return element;
    }
    if (cursor.lookahead("<!--")) {
      skip_comment(cursor);
      continue;
    }
    if (cursor.lookahead("<![CDATA[")) cursor.fail("CDATA sections are not supported");
    if (cursor.lookahead("<!")) cursor.fail("markup declarations are not supported");
    if (cursor.lookahead("<?")) cursor.fail("processing instructions are not supported");
    if (cursor.peek() == '<') {
      element.children.push_back(parse_element(cursor, depth + 1));
      continue;
    }
    if (cursor.peek() == '&') {
      cursor.take();
      append_entity(cursor, element.text);
      continue;
    }
    element.text.push_back(cursor.take());
  }
}

}  // namespace

Element parse_document(std::string_view text) {
  Cursor cursor(text);
  cursor.consume("\xEF\xBB\xBF");
  if (cursor.lookahead("<?xml")) {
    while (!cursor.consume("?>")) {
      if (cursor.eof()) cursor.fail("unterminated XML declaration");
      cursor.take();
    }
  }
  for (;;) {
    cursor.skip_whitespace();
    if (cursor.lookahead("<!--")) {
      skip_comment(cursor);
      continue;
    }
    break;
  }
  if (cursor.eof()) cursor.fail("document has no root element");
  if (cursor.lookahead("<!")) cursor.fail("markup declarations are not supported");
  if (cursor.lookahead("<?")) cursor.fail("processing instructions are not supported");
  if (cursor.peek() != '<') cursor.fail("expected the root element");
  Element root = parse_element(cursor, 0);
  for (;;) {
    cursor.skip_whitespace();
    if (cursor.lookahead("<!--")) {
      skip_comment(cursor);
      continue;
    }
    if (!cursor.eof()) cursor.fail("content after the root element");
    return root;
  }
}

std::string escape_attribute(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (const char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace ntiers::xml
