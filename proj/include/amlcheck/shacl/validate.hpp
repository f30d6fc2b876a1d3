#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "amlcheck/shacl/shapes.hpp"

namespace amlcheck::shacl {

struct ValidationResult {
  rdf::Term focus_node;
  std::optional<PropertyPath> result_path;
  std::optional<rdf::Term> value;
  rdf::Term source_shape;
  std::string source_constraint_component;  // IRI
  Severity severity = Severity::Violation;
  std::string message;
};

struct ValidationReport {
  bool conforms = true;  // true iff no result has severity Violation
  std::vector<ValidationResult> results;
};

/// All nodes a class target selects: rdf:type reached through
/// rdfs:subClassOf chains in the data graph.
std::set<rdf::Term> instances_of(const rdf::RdfGraph& data, const rdf::Term& class_iri);

/// Union of the shape's targets, per W3C target semantics.
std::set<rdf::Term> resolve_targets(const Shape& shape, const rdf::RdfGraph& data);

/// Value nodes reached from `node` along `path`; duplicates collapsed.
std::set<rdf::Term> evaluate_path(const PropertyPath& path, const rdf::Term& node,
                                  const rdf::RdfGraph& data);

/// Validates the data graph against every targeted shape. Never fails;
/// results are sorted by (focus node, shape id, component IRI, value, path).
ValidationReport validate(const rdf::RdfGraph& data, const ShapesGraph& shapes);

}  // namespace amlcheck::shacl
