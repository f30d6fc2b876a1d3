#include "amlcheck/caex/xml.hpp"

#include <cctype>
#include <cstdint>

namespace amlcheck::caex {

std::optional<std::string> XmlNode::attribute(const std::string& name) const {
  for (const auto& [key, value] : attributes)
    if (key == name) return value;
  return std::nullopt;
}

const XmlNode* XmlNode::first_child(const std::string& name) const {
  for (const auto& child : children)
    if (child.name == name) return &child;
  return nullptr;
}

namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string strip_ns_prefix(const std::string& name) {
  auto colon = name.find(':');
  return colon == std::string::npos ? name : name.substr(colon + 1);
}

class Reader {
public:
  explicit Reader(const std::string& input) : in_(input) {
    if (in_.rfind("\xEF\xBB\xBF", 0) == 0) pos_ = 3;  // UTF-8 BOM
  }

  XmlNode parse() {
    skip_prolog();
    if (eof() || peek() != '<') fail("expected root element");
    XmlNode root = element();
    skip_misc();
    if (!eof()) fail("content after root element");
    return root;
  }

private:
  const std::string& in_;
  std::size_t pos_ = 0;
  int line_ = 1;

  [[noreturn]] void fail(const std::string& message) const { throw XmlError(line_, message); }

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return eof() ? '\0' : in_[pos_]; }

  char advance() {
    if (eof()) fail("unexpected end of input");
    char c = in_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  bool starts_with(const char* s) const {
    return in_.compare(pos_, std::char_traits<char>::length(s), s) == 0;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void skip_until(const std::string& marker, const char* what) {
    auto at = in_.find(marker, pos_);
    if (at == std::string::npos) fail(std::string("unterminated ") + what);
    while (pos_ < at + marker.size()) advance();
  }

  void skip_doctype() {
    // consume "<!DOCTYPE ... >" allowing a bracketed internal subset
    int depth = 0;
    while (!eof()) {
      char c = advance();
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth == 0) return;
    }
    fail("unterminated DOCTYPE");
  }

  void skip_prolog() {
    while (true) {
      skip_ws();
      if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  void skip_misc() {
    while (true) {
      skip_ws();
      if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else {
        return;
      }
    }
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  static bool is_name_char(char c) {
    return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
  }

  std::string name() {
    if (eof() || !is_name_start(peek())) fail("expected a name");
    std::string out;
    while (!eof() && is_name_char(peek())) out += advance();
    return out;
  }

  std::string decode_entity() {
    // positioned after '&'
    std::string entity;
    while (!eof() && peek() != ';') {
      entity += advance();
      if (entity.size() > 10) fail("malformed entity reference");
    }
    if (eof()) fail("unterminated entity reference");
    advance();  // ';'
    if (entity == "amp") return "&";
    if (entity == "lt") return "<";
    if (entity == "gt") return ">";
    if (entity == "apos") return "'";
    if (entity == "quot") return "\"";
    if (!entity.empty() && entity[0] == '#') {
      std::uint32_t cp = 0;
      std::size_t i = 1;
      bool hex = entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X');
      if (hex) i = 2;
      if (i >= entity.size()) fail("malformed character reference");
      for (; i < entity.size(); ++i) {
        char c = entity[i];
        if (hex && std::isxdigit(static_cast<unsigned char>(c))) {
          cp = cp * 16 + static_cast<std::uint32_t>(
                             c <= '9' ? c - '0' : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
        } else if (!hex && std::isdigit(static_cast<unsigned char>(c))) {
          cp = cp * 10 + static_cast<std::uint32_t>(c - '0');
        } else {
          fail("malformed character reference");
        }
      }
      std::string out;
      append_utf8(out, cp);
      return out;
    }
    fail("unknown entity '&" + entity + ";'");
  }

  std::string attribute_value() {
    char quote = advance();
    if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
    std::string out;
    while (true) {
      if (eof()) fail("unterminated attribute value");
      char c = advance();
      if (c == quote) break;
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        out += decode_entity();
      } else {
        out += c;
      }
    }
    return out;
  }

  XmlNode element() {
    advance();  // '<'
    XmlNode node;
    node.line = line_;
    node.name = strip_ns_prefix(name());
    while (true) {
      skip_ws();
      if (eof()) fail("unterminated start tag");
      if (peek() == '>') {
        advance();
        content(node);
        return node;
      }
      if (peek() == '/') {
        advance();
        if (peek() != '>') fail("expected '>' after '/'");
        advance();
        return node;
      }
      std::string attr = strip_ns_prefix(name());
      skip_ws();
      if (peek() != '=') fail("expected '=' after attribute name");
      advance();
      skip_ws();
      std::string value = attribute_value();
      for (const auto& [existing, unused] : node.attributes)
        if (existing == attr) fail("duplicate attribute '" + attr + "'");
      node.attributes.emplace_back(attr, value);
    }
  }

  void content(XmlNode& node) {
    while (true) {
      if (eof()) fail("unterminated element <" + node.name + ">");
      char c = peek();
      if (c == '<') {
        if (starts_with("</")) {
          advance();
          advance();
          std::string closing = strip_ns_prefix(name());
          if (closing != node.name)
            fail("mismatched closing tag </" + closing + "> for <" + node.name + ">");
          skip_ws();
          if (peek() != '>') fail("expected '>' in closing tag");
          advance();
          return;
        }
        if (starts_with("<!--")) {
          skip_until("-->", "comment");
          continue;
        }
        if (starts_with("<![CDATA[")) {
          for (int i = 0; i < 9; ++i) advance();
          auto end = in_.find("]]>", pos_);
          if (end == std::string::npos) fail("unterminated CDATA section");
          while (pos_ < end) node.text += advance();
          for (int i = 0; i < 3; ++i) advance();
          continue;
        }
        if (starts_with("<?")) {
          skip_until("?>", "processing instruction");
          continue;
        }
        node.children.push_back(element());
        continue;
      }
      if (c == '&') {
        advance();
        node.text += decode_entity();
        continue;
      }
      node.text += advance();
    }
  }
};

}  // namespace

XmlNode parse_xml(const std::string& input) {
  Reader reader(input);
  return reader.parse();
}

}  // namespace amlcheck::caex
