#pragma once

#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "amlcheck/rdf/graph.hpp"

namespace amlcheck::shacl {

/// A shape description the compiler cannot use (property shape without
/// sh:path, cardinality on a node shape, malformed parameter values, ...).
/// Signals unusable LLM output; the generate stage retries on it.
class IllFormedShapeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Severity { Info, Warning, Violation };

const char* severity_iri(Severity severity);

/// sh:path expression: predicate, inverse, sequence, or alternative.
/// zeroOrMore/oneOrMore/zeroOrOne are out of scope and reported as
/// unsupported.
struct PropertyPath {
  enum class Kind { Predicate, Inverse, Sequence, Alternative };

  Kind kind = Kind::Predicate;
  rdf::Term predicate;              // Kind::Predicate
  std::vector<PropertyPath> parts;  // inverse (1), sequence/alternative (>=1)

  static PropertyPath pred(rdf::Term iri);
  static PropertyPath inverse(PropertyPath inner);
  static PropertyPath sequence(std::vector<PropertyPath> steps);
  static PropertyPath alternative(std::vector<PropertyPath> options);

  /// SPARQL-style rendering: ^p, (a/b), (a|b).
  std::string to_string(const std::map<std::string, std::string>& prefixes) const;
};

struct Target {
  enum class Kind { Class, Node, SubjectsOf, ObjectsOf, ImplicitClass };
  Kind kind;
  rdf::Term value;
};

// Constraint components. Each struct carries the parameters of one
// occurrence; a shape may hold several.
struct MinCount { int count = 0; };
struct MaxCount { int count = 0; };
struct ClassConstraint { rdf::Term class_iri; };
struct DatatypeConstraint { rdf::Term datatype; };
struct NodeKindConstraint { rdf::Term kind; };  // sh:IRI, sh:Literal, ...
struct HasValue { rdf::Term value; };
struct InConstraint { std::vector<rdf::Term> values; };
struct PatternConstraint {
  std::string pattern;
  std::string flags;
  std::regex compiled;
};
struct NodeConstraint { rdf::Term shape; };
struct NotConstraint { rdf::Term shape; };
struct AndConstraint { std::vector<rdf::Term> shapes; };
struct OrConstraint { std::vector<rdf::Term> shapes; };
struct QualifiedValueShape {
  rdf::Term shape;
  std::optional<int> min_count;
  std::optional<int> max_count;
};

using ConstraintComponent =
    std::variant<MinCount, MaxCount, ClassConstraint, DatatypeConstraint, NodeKindConstraint,
                 HasValue, InConstraint, PatternConstraint, NodeConstraint, NotConstraint,
                 AndConstraint, OrConstraint, QualifiedValueShape>;

/// Constraint-component IRI (sh:MinCountConstraintComponent, ...) used for
/// sh:sourceConstraintComponent. QualifiedValueShape reports through the
/// dedicated min/max IRIs instead.
std::string component_iri(const ConstraintComponent& component);

struct Shape {
  rdf::Term id;
  bool is_property_shape = false;
  std::vector<Target> targets;
  std::optional<PropertyPath> path;  // property shapes only
  std::vector<ConstraintComponent> components;
  std::vector<rdf::Term> property_children;  // sh:property
  Severity severity = Severity::Violation;
  std::vector<std::string> messages;  // sh:message, sorted
};

struct Diagnostic {
  rdf::Term shape;
  std::string parameter_iri;  // the unsupported sh:* parameter or path form
};

struct ShapesGraph {
  std::map<rdf::Term, Shape> shapes;
  std::vector<Diagnostic> unsupported;

  const Shape* find(const rdf::Term& id) const {
    auto it = shapes.find(id);
    return it == shapes.end() ? nullptr : &it->second;
  }
  bool empty() const { return shapes.empty(); }
};

/// Compiles RDF shape descriptions: explicit sh:NodeShape/sh:PropertyShape
/// nodes, targets of sh:property/sh:node/sh:not/sh:and/sh:or/
/// sh:qualifiedValueShape references, and any node carrying a target.
/// Unsupported constraint parameters become diagnostics, not errors.
ShapesGraph parse_shapes(const rdf::RdfGraph& graph);

}  // namespace amlcheck::shacl
