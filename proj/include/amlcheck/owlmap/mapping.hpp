#pragma once

#include <map>
#include <string>
#include <vector>

#include "amlcheck/caex/model.hpp"
#include "amlcheck/rdf/graph.hpp"

namespace amlcheck::owlmap {

struct MappingConfig {
  /// Base for minted instance IRIs; must end in "/" or "#".
  std::string base_iri = "http://example.org/model/";
  /// Vocabulary namespace (aml:*); must end in "/" or "#".
  std::string aml_namespace = "http://example.org/aml#";
  /// Namespace under which library-class IRIs are minted from CAEX paths
  /// ("<lib_namespace><Lib>/<Class>", segments percent-encoded).
  std::string lib_namespace = "http://example.org/lib/";

  void validate() const;  // throws std::invalid_argument on bad namespaces
};

struct MappingReport {
  /// Mapped element counts, keyed by CAEX kind name; library classes are
  /// counted under their meta-class (RoleClass, InterfaceClass, ...).
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> warnings;  // dangling refs, unresolved class paths
};

/// Vocabulary IRIs under a configured namespace.
struct AmlVocab {
  explicit AmlVocab(const std::string& ns);

  rdf::Term caex_file;
  rdf::Term instance_hierarchy;
  rdf::Term internal_element;
  rdf::Term external_interface;
  rdf::Term internal_link;
  rdf::Term attribute;
  rdf::Term role_class;
  rdf::Term interface_class;
  rdf::Term system_unit_class;

  rdf::Term has_instance_hierarchy;
  rdf::Term has_internal_element;
  rdf::Term has_external_interface;
  rdf::Term has_internal_link;
  rdf::Term has_attribute;
  rdf::Term has_name;
  rdf::Term has_id;
  rdf::Term has_value;
  rdf::Term ref_partner_side_a;
  rdf::Term ref_partner_side_b;
};

/// RFC 3986 percent-encoding, keeping unreserved characters.
std::string percent_encode(const std::string& s);

/// Deterministic instance IRI: base + encoded ID when present, otherwise
/// base + the element's CAEX path segments, each percent-encoded, "/"-joined.
rdf::Term mint_iri(const caex::CaexElement& element, const MappingConfig& cfg);

/// Library-class IRI from the class's CAEX path.
rdf::Term mint_class_iri(const caex::CaexClass& cls, const MappingConfig& cfg);

/// Mirrors the document structure into RDF under the aml vocabulary.
/// Never fails: dangling references become report warnings and the
/// corresponding triple is omitted.
std::pair<rdf::RdfGraph, MappingReport> map_document(const caex::AmlDocument& doc,
                                                     const MappingConfig& cfg);

}  // namespace amlcheck::owlmap
