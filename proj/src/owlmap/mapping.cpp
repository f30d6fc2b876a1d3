#include "amlcheck/owlmap/mapping.hpp"

#include <cctype>
#include <stdexcept>

namespace amlcheck::owlmap {

using caex::CaexClass;
using caex::CaexElement;
using caex::CaexKind;
using rdf::RdfGraph;
using rdf::Term;

void MappingConfig::validate() const {
  auto check = [](const char* what, const std::string& iri) {
    if (iri.empty() || (iri.back() != '/' && iri.back() != '#'))
      throw std::invalid_argument(std::string(what) + " must end in '/' or '#': " + iri);
    if (iri.find(':') == std::string::npos)
      throw std::invalid_argument(std::string(what) + " must be an absolute IRI: " + iri);
  };
  check("base_iri", base_iri);
  check("aml_namespace", aml_namespace);
  check("lib_namespace", lib_namespace);
}

AmlVocab::AmlVocab(const std::string& ns)
    : caex_file(Term::iri(ns + "CAEXFile")),
      instance_hierarchy(Term::iri(ns + "InstanceHierarchy")),
      internal_element(Term::iri(ns + "InternalElement")),
      external_interface(Term::iri(ns + "ExternalInterface")),
      internal_link(Term::iri(ns + "InternalLink")),
      attribute(Term::iri(ns + "Attribute")),
      role_class(Term::iri(ns + "RoleClass")),
      interface_class(Term::iri(ns + "InterfaceClass")),
      system_unit_class(Term::iri(ns + "SystemUnitClass")),
      has_instance_hierarchy(Term::iri(ns + "hasInstanceHierarchy")),
      has_internal_element(Term::iri(ns + "hasInternalElement")),
      has_external_interface(Term::iri(ns + "hasExternalInterface")),
      has_internal_link(Term::iri(ns + "hasInternalLink")),
      has_attribute(Term::iri(ns + "hasAttribute")),
      has_name(Term::iri(ns + "hasName")),
      has_id(Term::iri(ns + "hasID")),
      has_value(Term::iri(ns + "hasValue")),
      ref_partner_side_a(Term::iri(ns + "refPartnerSideA")),
      ref_partner_side_b(Term::iri(ns + "refPartnerSideB")) {}

std::string percent_encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    bool unreserved = std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0xF];
    }
  }
  return out;
}

rdf::Term mint_iri(const CaexElement& element, const MappingConfig& cfg) {
  if (element.id) return Term::iri(cfg.base_iri + percent_encode(*element.id));
  std::string path;
  for (std::size_t i = 0; i < element.path_segments.size(); ++i) {
    if (i) path += "/";
    path += percent_encode(element.path_segments[i]);
  }
  return Term::iri(cfg.base_iri + path);
}

rdf::Term mint_class_iri(const CaexClass& cls, const MappingConfig& cfg) {
  std::string encoded;
  std::string segment;
  for (char c : cls.path + "/") {
    if (c == '/') {
      if (!encoded.empty()) encoded += "/";
      encoded += percent_encode(segment);
      segment.clear();
    } else {
      segment += c;
    }
  }
  return Term::iri(cfg.lib_namespace + encoded);
}

namespace {

class Mapper {
public:
  Mapper(const caex::AmlDocument& doc, const MappingConfig& cfg)
      : doc_(doc), cfg_(cfg), vocab_(cfg.aml_namespace) {}

  std::pair<RdfGraph, MappingReport> run() {
    graph_.set_prefix("aml", cfg_.aml_namespace);
    graph_.set_prefix("data", cfg_.base_iri);
    graph_.set_prefix("lib", cfg_.lib_namespace);

    Term file = Term::iri(cfg_.base_iri + percent_encode(doc_.file_name));
    graph_.insert(file, rdf_type(), vocab_.caex_file);
    graph_.insert(file, vocab_.has_name, Term::literal(doc_.file_name));

    for (const auto* lib : doc_.all_libraries())
      for (const auto& cls : lib->classes) map_class(cls, lib->kind);

    for (const auto& hierarchy : doc_.instance_hierarchies) {
      Term node = mint_iri(hierarchy, cfg_);
      graph_.insert(file, vocab_.has_instance_hierarchy, node);
      map_element(hierarchy, node);
    }
    return {std::move(graph_), std::move(report_)};
  }

private:
  const caex::AmlDocument& doc_;
  const MappingConfig& cfg_;
  AmlVocab vocab_;
  RdfGraph graph_;
  MappingReport report_;

  static Term rdf_type() { return Term::iri(rdf::iris::rdf_type); }
  static Term sub_class_of() { return Term::iri(rdf::iris::rdfs_sub_class_of); }

  const Term& meta_class(caex::LibraryKind kind) const {
    switch (kind) {
      case caex::LibraryKind::RoleClassLib: return vocab_.role_class;
      case caex::LibraryKind::InterfaceClassLib: return vocab_.interface_class;
      case caex::LibraryKind::SystemUnitClassLib: return vocab_.system_unit_class;
    }
    return vocab_.role_class;
  }

  void count(const char* key) { ++report_.counts[key]; }

  void map_class(const CaexClass& cls, caex::LibraryKind kind) {
    Term iri = mint_class_iri(cls, cfg_);
    graph_.insert(iri, rdf_type(), meta_class(kind));
    graph_.insert(iri, vocab_.has_name, Term::literal(cls.name));
    count(kind == caex::LibraryKind::RoleClassLib       ? "RoleClass"
          : kind == caex::LibraryKind::InterfaceClassLib ? "InterfaceClass"
                                                         : "SystemUnitClass");
    if (cls.ref_base_class_path) {
      auto ancestry = caex::class_ancestry(doc_, cls);
      if (ancestry.cyclic)
        report_.warnings.push_back("cyclic inheritance at class path '" + cls.path + "'");
      if (ancestry.chain.size() > 1) {
        graph_.insert(iri, sub_class_of(), mint_class_iri(*ancestry.chain[1], cfg_));
      } else {
        report_.warnings.push_back("unresolved RefBaseClassPath '" + *cls.ref_base_class_path +
                                   "' at class '" + cls.path + "'");
      }
    }
    for (const auto& child : cls.children) map_class(child, kind);
  }

  void type_by_class_path(const Term& node, const std::string& path, const std::string& where) {
    const CaexClass* cls = caex::resolve_class_path(doc_, path);
    if (!cls) {
      report_.warnings.push_back("unresolved class path '" + path + "' at " + where);
      return;
    }
    graph_.insert(node, rdf_type(), mint_class_iri(*cls, cfg_));
  }

  void link_partner(const Term& link, const Term& predicate, const std::string& ref,
                    const std::string& where) {
    const CaexElement* target = caex::resolve_interface_ref(doc_, ref);
    if (!target) {
      report_.warnings.push_back("dangling interface reference '" + ref + "' at " + where);
      return;
    }
    graph_.insert(link, predicate, mint_iri(*target, cfg_));
  }

  std::string where(const CaexElement& element) const {
    std::string path;
    for (const auto& segment : element.path_segments) path += "/" + segment;
    return path.empty() ? "(root)" : path;
  }

  void map_element(const CaexElement& element, const Term& node) {
    switch (element.kind) {
      case CaexKind::InstanceHierarchy:
        count("InstanceHierarchy");
        graph_.insert(node, rdf_type(), vocab_.instance_hierarchy);
        break;
      case CaexKind::InternalElement:
        count("InternalElement");
        graph_.insert(node, rdf_type(), vocab_.internal_element);
        break;
      case CaexKind::ExternalInterface:
        count("ExternalInterface");
        graph_.insert(node, rdf_type(), vocab_.external_interface);
        if (element.ref_base_class_path)
          type_by_class_path(node, *element.ref_base_class_path, where(element));
        break;
      case CaexKind::InternalLink:
        count("InternalLink");
        graph_.insert(node, rdf_type(), vocab_.internal_link);
        if (element.ref_partner_side_a)
          link_partner(node, vocab_.ref_partner_side_a, *element.ref_partner_side_a,
                       where(element));
        if (element.ref_partner_side_b)
          link_partner(node, vocab_.ref_partner_side_b, *element.ref_partner_side_b,
                       where(element));
        break;
      case CaexKind::Attribute:
        count("Attribute");
        graph_.insert(node, rdf_type(), vocab_.attribute);
        if (element.attribute_value)
          graph_.insert(node, vocab_.has_value, Term::literal(*element.attribute_value));
        break;
      default:
        break;
    }
    if (!element.name.empty()) graph_.insert(node, vocab_.has_name, Term::literal(element.name));
    if (element.id) graph_.insert(node, vocab_.has_id, Term::literal(*element.id));

    for (const auto& child : element.children) {
      switch (child.kind) {
        case CaexKind::InternalElement: {
          Term child_node = mint_iri(child, cfg_);
          graph_.insert(node, vocab_.has_internal_element, child_node);
          map_element(child, child_node);
          break;
        }
        case CaexKind::ExternalInterface: {
          Term child_node = mint_iri(child, cfg_);
          graph_.insert(node, vocab_.has_external_interface, child_node);
          map_element(child, child_node);
          break;
        }
        case CaexKind::InternalLink: {
          Term child_node = mint_iri(child, cfg_);
          graph_.insert(node, vocab_.has_internal_link, child_node);
          map_element(child, child_node);
          break;
        }
        case CaexKind::Attribute: {
          Term child_node = mint_iri(child, cfg_);
          graph_.insert(node, vocab_.has_attribute, child_node);
          map_element(child, child_node);
          break;
        }
        case CaexKind::RoleRequirements:
        case CaexKind::SupportedRoleClass:
          // consumed as the parent's type edge, no node of their own
          count(caex::to_string(child.kind));
          if (child.ref_base_class_path) {
            type_by_class_path(node, *child.ref_base_class_path, where(child));
          } else {
            report_.warnings.push_back("role reference without class path at " + where(child));
          }
          break;
        default:
          break;  // vendor extensions carry no mapped meaning
      }
    }
  }
};

}  // namespace

std::pair<RdfGraph, MappingReport> map_document(const caex::AmlDocument& doc,
                                                const MappingConfig& cfg) {
  cfg.validate();
  return Mapper(doc, cfg).run();
}

}  // namespace amlcheck::owlmap
