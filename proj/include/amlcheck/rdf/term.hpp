#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace amlcheck::rdf {

/// An absolute IRI. Relative IRIs are resolved at parse time and never stored.
struct Iri {
  std::string value;

  friend auto operator<=>(const Iri&, const Iri&) = default;
};

struct BlankNode {
  std::string label;

  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
};

/// A literal keeps its exact lexical form; comparison is lexical + datatype +
/// language tag, with no value-space coercion.
struct Literal {
  std::string lexical;
  Iri datatype;
  std::optional<std::string> language;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

class Term {
public:
  using Variant = std::variant<Iri, BlankNode, Literal>;

  Term() : value_(Iri{}) {}
  explicit Term(Variant v) : value_(std::move(v)) {}

  static Term iri(std::string value);
  static Term blank(std::string label);
  /// Plain string literal (xsd:string).
  static Term literal(std::string lexical);
  static Term typed_literal(std::string lexical, std::string datatype_iri);
  /// Language-tagged string (rdf:langString). Tags are lowercased.
  static Term lang_literal(std::string lexical, std::string language);
  static Term boolean(bool b);
  static Term integer(long long n);

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_blank() const { return std::holds_alternative<BlankNode>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }

  const Iri& as_iri() const { return std::get<Iri>(value_); }
  const BlankNode& as_blank() const { return std::get<BlankNode>(value_); }
  const Literal& as_literal() const { return std::get<Literal>(value_); }

  const Variant& value() const { return value_; }

  /// IRI value, blank label, or literal lexical form.
  const std::string& text() const;

  friend auto operator<=>(const Term&, const Term&) = default;

private:
  Variant value_;
};

namespace ns {
inline constexpr const char* rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* sh = "http://www.w3.org/ns/shacl#";
inline constexpr const char* owl = "http://www.w3.org/2002/07/owl#";
}  // namespace ns

namespace iris {
inline const std::string rdf_type = std::string(ns::rdf) + "type";
inline const std::string rdf_first = std::string(ns::rdf) + "first";
inline const std::string rdf_rest = std::string(ns::rdf) + "rest";
inline const std::string rdf_nil = std::string(ns::rdf) + "nil";
inline const std::string rdf_lang_string = std::string(ns::rdf) + "langString";
inline const std::string rdfs_sub_class_of = std::string(ns::rdfs) + "subClassOf";
inline const std::string rdfs_class = std::string(ns::rdfs) + "Class";
inline const std::string xsd_string = std::string(ns::xsd) + "string";
inline const std::string xsd_boolean = std::string(ns::xsd) + "boolean";
inline const std::string xsd_integer = std::string(ns::xsd) + "integer";
inline const std::string xsd_decimal = std::string(ns::xsd) + "decimal";
inline const std::string xsd_double = std::string(ns::xsd) + "double";
}  // namespace iris

}  // namespace amlcheck::rdf
