#include "amlcheck/rdf/term.hpp"

#include <algorithm>
#include <cctype>

namespace amlcheck::rdf {

Term Term::iri(std::string value) { return Term(Iri{std::move(value)}); }

Term Term::blank(std::string label) { return Term(BlankNode{std::move(label)}); }

Term Term::literal(std::string lexical) {
  return Term(Literal{std::move(lexical), Iri{iris::xsd_string}, std::nullopt});
}

Term Term::typed_literal(std::string lexical, std::string datatype_iri) {
  return Term(Literal{std::move(lexical), Iri{std::move(datatype_iri)}, std::nullopt});
}

Term Term::lang_literal(std::string lexical, std::string language) {
  std::transform(language.begin(), language.end(), language.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return Term(Literal{std::move(lexical), Iri{iris::rdf_lang_string}, std::move(language)});
}

Term Term::boolean(bool b) {
  return typed_literal(b ? "true" : "false", iris::xsd_boolean);
}

Term Term::integer(long long n) {
  return typed_literal(std::to_string(n), iris::xsd_integer);
}

const std::string& Term::text() const {
  if (is_iri()) return as_iri().value;
  if (is_blank()) return as_blank().label;
  return as_literal().lexical;
}

}  // namespace amlcheck::rdf
