#pragma once

#include <string>

#include "amlcheck/shacl/validate.hpp"

namespace amlcheck::shacl {

/// Serializes the report with the W3C SHACL vocabulary (sh:ValidationReport,
/// sh:result, sh:focusNode, ...). Structured result paths are re-emitted as
/// sh:inversePath / sh:alternativePath / RDF-list blank nodes.
rdf::RdfGraph report_to_graph(const ValidationReport& report);

/// Plain-text table (focus node, path, component, message) for humans.
std::string report_to_text(const ValidationReport& report,
                           const std::map<std::string, std::string>& prefixes);

}  // namespace amlcheck::shacl
