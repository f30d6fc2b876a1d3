#pragma once

// Brute-force SHACL checker used as the independent oracle: target
// resolution, path evaluation and the four components are re-derived here
// with naive full scans and fixpoint loops, sharing no code with the engine.

#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "amlcheck/rdf/graph.hpp"

namespace testsupport {

using amlcheck::rdf::RdfGraph;
using amlcheck::rdf::Term;
using amlcheck::rdf::Triple;

struct OracleShape {
  enum class TargetKind { Class, Node, SubjectsOf } target_kind = TargetKind::Class;
  Term target_value;
  Term path_predicate;
  bool inverse_path = false;
  enum class Component { MinCount, MaxCount, Class, HasValue } component = Component::MinCount;
  int count = 0;   // MinCount/MaxCount
  Term parameter;  // Class / HasValue
};

using OracleViolation = std::tuple<Term, std::optional<Term>, std::string>;

inline std::set<Term> oracle_subclass_closure(const RdfGraph& data, const Term& root) {
  const Term sub = Term::iri(amlcheck::rdf::iris::rdfs_sub_class_of);
  std::set<Term> closure{root};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& t : data.triples()) {
      if (t.predicate == sub && closure.count(t.object) && !closure.count(t.subject)) {
        closure.insert(t.subject);
        grew = true;
      }
    }
  }
  return closure;
}

inline bool oracle_has_class(const RdfGraph& data, const Term& node, const Term& klass) {
  const Term type = Term::iri(amlcheck::rdf::iris::rdf_type);
  auto closure = oracle_subclass_closure(data, klass);
  for (const auto& t : data.triples())
    if (t.predicate == type && t.subject == node && closure.count(t.object)) return true;
  return false;
}

inline std::set<Term> oracle_targets(const RdfGraph& data, const OracleShape& shape) {
  std::set<Term> out;
  const Term type = Term::iri(amlcheck::rdf::iris::rdf_type);
  switch (shape.target_kind) {
    case OracleShape::TargetKind::Class: {
      auto closure = oracle_subclass_closure(data, shape.target_value);
      for (const auto& t : data.triples())
        if (t.predicate == type && closure.count(t.object)) out.insert(t.subject);
      break;
    }
    case OracleShape::TargetKind::Node:
      out.insert(shape.target_value);
      break;
    case OracleShape::TargetKind::SubjectsOf:
      for (const auto& t : data.triples())
        if (t.predicate == shape.target_value) out.insert(t.subject);
      break;
  }
  return out;
}

inline std::set<Term> oracle_values(const RdfGraph& data, const Term& focus,
                                    const OracleShape& shape) {
  std::set<Term> out;
  for (const auto& t : data.triples()) {
    if (!shape.inverse_path && t.subject == focus && t.predicate == shape.path_predicate)
      out.insert(t.object);
    if (shape.inverse_path && t.object == focus && t.predicate == shape.path_predicate)
      out.insert(t.subject);
  }
  return out;
}

inline std::set<OracleViolation> brute_validate(const RdfGraph& data, const OracleShape& shape) {
  const std::string sh = "http://www.w3.org/ns/shacl#";
  std::set<OracleViolation> out;
  for (const auto& focus : oracle_targets(data, shape)) {
    auto values = oracle_values(data, focus, shape);
    switch (shape.component) {
      case OracleShape::Component::MinCount:
        if (static_cast<int>(values.size()) < shape.count)
          out.insert({focus, std::nullopt, sh + "MinCountConstraintComponent"});
        break;
      case OracleShape::Component::MaxCount:
        if (static_cast<int>(values.size()) > shape.count)
          out.insert({focus, std::nullopt, sh + "MaxCountConstraintComponent"});
        break;
      case OracleShape::Component::Class:
        for (const auto& v : values)
          if (v.is_literal() || !oracle_has_class(data, v, shape.parameter))
            out.insert({focus, v, sh + "ClassConstraintComponent"});
        break;
      case OracleShape::Component::HasValue:
        if (!values.count(shape.parameter))
          out.insert({focus, std::nullopt, sh + "HasValueConstraintComponent"});
        break;
    }
  }
  return out;
}

/// Renders the oracle shape as a Turtle shapes document, so the engine side
/// runs through its full parse -> compile -> validate path.
inline std::string oracle_shape_to_turtle(const OracleShape& shape) {
  auto term = [](const Term& t) -> std::string {
    if (t.is_iri()) return "<" + t.as_iri().value + ">";
    if (t.is_blank()) return "_:" + t.as_blank().label;
    const auto& lit = t.as_literal();
    if (lit.datatype.value == amlcheck::rdf::iris::xsd_integer) return lit.lexical;
    return "\"" + lit.lexical + "\"";
  };
  std::ostringstream out;
  out << "@prefix sh: <http://www.w3.org/ns/shacl#> .\n";
  out << "@prefix osh: <http://example.org/oracle/> .\n\n";
  out << "osh:S a sh:NodeShape ;\n";
  switch (shape.target_kind) {
    case OracleShape::TargetKind::Class:
      out << "  sh:targetClass " << term(shape.target_value) << " ;\n";
      break;
    case OracleShape::TargetKind::Node:
      out << "  sh:targetNode " << term(shape.target_value) << " ;\n";
      break;
    case OracleShape::TargetKind::SubjectsOf:
      out << "  sh:targetSubjectsOf " << term(shape.target_value) << " ;\n";
      break;
  }
  out << "  sh:property osh:S-p .\n\n";
  out << "osh:S-p a sh:PropertyShape ;\n";
  if (shape.inverse_path)
    out << "  sh:path [ sh:inversePath " << term(shape.path_predicate) << " ] ;\n";
  else
    out << "  sh:path " << term(shape.path_predicate) << " ;\n";
  switch (shape.component) {
    case OracleShape::Component::MinCount:
      out << "  sh:minCount " << shape.count << " .\n";
      break;
    case OracleShape::Component::MaxCount:
      out << "  sh:maxCount " << shape.count << " .\n";
      break;
    case OracleShape::Component::Class:
      out << "  sh:class " << term(shape.parameter) << " .\n";
      break;
    case OracleShape::Component::HasValue:
      out << "  sh:hasValue " << term(shape.parameter) << " .\n";
      break;
  }
  return out.str();
}

inline OracleShape random_oracle_shape(std::mt19937& rng) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  OracleShape shape;
  int t = pick(10);
  if (t < 5) {
    shape.target_kind = OracleShape::TargetKind::Class;
    shape.target_value = Term::iri("http://example.org/t/C" + std::to_string(pick(5)));
  } else if (t < 8) {
    shape.target_kind = OracleShape::TargetKind::Node;
    shape.target_value = pick(10) == 0
                             ? Term::literal("v" + std::to_string(pick(6)))
                             : Term::iri("http://example.org/t/n" + std::to_string(pick(8)));
  } else {
    shape.target_kind = OracleShape::TargetKind::SubjectsOf;
    shape.target_value = Term::iri("http://example.org/t/p" + std::to_string(pick(4)));
  }
  shape.path_predicate = Term::iri("http://example.org/t/p" + std::to_string(pick(4)));
  shape.inverse_path = pick(10) < 3;
  switch (pick(4)) {
    case 0:
      shape.component = OracleShape::Component::MinCount;
      shape.count = pick(4);
      break;
    case 1:
      shape.component = OracleShape::Component::MaxCount;
      shape.count = pick(4);
      break;
    case 2:
      shape.component = OracleShape::Component::Class;
      shape.parameter = Term::iri("http://example.org/t/C" + std::to_string(pick(5)));
      break;
    default:
      shape.component = OracleShape::Component::HasValue;
      shape.parameter = pick(3) == 0
                            ? Term::literal("v" + std::to_string(pick(6)))
                            : Term::iri("http://example.org/t/n" + std::to_string(pick(8)));
  }
  return shape;
}

}  // namespace testsupport
