#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amlcheck::caex {

class XmlError : public std::runtime_error {
public:
  XmlError(int line, const std::string& message)
      : std::runtime_error("XML error at line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// Element node of a non-validating XML reader: elements, attributes, and
/// concatenated character data. Comments, PIs and the prolog are skipped;
/// predefined entities and numeric character references are decoded.
/// Namespace prefixes are stripped from element and attribute names.
struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlNode> children;
  std::string text;
  int line = 0;

  std::optional<std::string> attribute(const std::string& name) const;
  const XmlNode* first_child(const std::string& name) const;
};

/// Parses a UTF-8 XML document and returns its root element.
/// Throws XmlError when the input is not well-formed.
XmlNode parse_xml(const std::string& input);

}  // namespace amlcheck::caex
