#include <algorithm>

#include "amlcheck/caex/model.hpp"
#include "amlcheck/caex/xml.hpp"

namespace amlcheck::caex {

const char* to_string(CaexKind kind) {
  switch (kind) {
    case CaexKind::InternalElement: return "InternalElement";
    case CaexKind::ExternalInterface: return "ExternalInterface";
    case CaexKind::InternalLink: return "InternalLink";
    case CaexKind::Attribute: return "Attribute";
    case CaexKind::RoleRequirements: return "RoleRequirements";
    case CaexKind::SupportedRoleClass: return "SupportedRoleClass";
    case CaexKind::InstanceHierarchy: return "InstanceHierarchy";
    case CaexKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* to_string(LibraryKind kind) {
  switch (kind) {
    case LibraryKind::RoleClassLib: return "RoleClassLib";
    case LibraryKind::InterfaceClassLib: return "InterfaceClassLib";
    case LibraryKind::SystemUnitClassLib: return "SystemUnitClassLib";
  }
  return "RoleClassLib";
}

const CaexElement* AmlDocument::element_by_id(const std::string& id) const {
  auto it = id_index.find(id);
  if (it == id_index.end()) return nullptr;
  if (const auto* const* element = std::get_if<const CaexElement*>(&it->second)) return *element;
  return nullptr;
}

std::vector<const CaexLibrary*> AmlDocument::all_libraries() const {
  std::vector<const CaexLibrary*> out;
  for (const auto& lib : role_class_libs) out.push_back(&lib);
  for (const auto& lib : interface_class_libs) out.push_back(&lib);
  for (const auto& lib : system_unit_class_libs) out.push_back(&lib);
  return out;
}

namespace {

CaexKind kind_of_tag(const std::string& tag) {
  if (tag == "InternalElement") return CaexKind::InternalElement;
  if (tag == "ExternalInterface") return CaexKind::ExternalInterface;
  if (tag == "InternalLink") return CaexKind::InternalLink;
  if (tag == "Attribute") return CaexKind::Attribute;
  if (tag == "RoleRequirements") return CaexKind::RoleRequirements;
  if (tag == "SupportedRoleClass") return CaexKind::SupportedRoleClass;
  if (tag == "InstanceHierarchy") return CaexKind::InstanceHierarchy;
  return CaexKind::Unknown;
}

std::string synthesized_segment(const CaexElement& element, std::size_t ordinal) {
  return std::string(to_string(element.kind)) + "_" + std::to_string(ordinal);
}

class DocumentBuilder {
public:
  AmlDocument build(const XmlNode& root, const std::string& file_name) {
    if (root.name != "CAEXFile") throw NotCaex("root element is <" + root.name + ">, not <CAEXFile>");
    AmlDocument doc;
    doc.file_name = file_name;
    doc.schema_version = root.attribute("SchemaVersion").value_or("");
    for (const auto& child : root.children) {
      if (child.name == "InstanceHierarchy") {
        doc.instance_hierarchies.push_back(hierarchy(child));
      } else if (child.name == "RoleClassLib") {
        doc.role_class_libs.push_back(library(child, LibraryKind::RoleClassLib, "RoleClass"));
      } else if (child.name == "InterfaceClassLib") {
        doc.interface_class_libs.push_back(
            library(child, LibraryKind::InterfaceClassLib, "InterfaceClass"));
      } else if (child.name == "SystemUnitClassLib") {
        doc.system_unit_class_libs.push_back(
            library(child, LibraryKind::SystemUnitClassLib, "SystemUnitClass"));
      }
      // other CAEXFile children (SourceDocumentInformation, ...) carry no
      // model content for validation
    }
    index(doc);
    return doc;
  }

private:
  CaexElement hierarchy(const XmlNode& node) {
    CaexElement element;
    element.kind = CaexKind::InstanceHierarchy;
    element.name = node.attribute("Name").value_or("");
    element.xml_name = node.name;
    element.path_segments = {element.name.empty() ? std::string("InstanceHierarchy_0")
                                                  : element.name};
    children_of(node, element);
    return element;
  }

  CaexElement convert(const XmlNode& node, const std::vector<std::string>& parent_path,
                      std::size_t ordinal) {
    CaexElement element;
    element.kind = kind_of_tag(node.name);
    element.xml_name = node.name;
    element.name = node.attribute("Name").value_or("");
    element.id = node.attribute("ID");

    switch (element.kind) {
      case CaexKind::ExternalInterface:
        element.ref_base_class_path = node.attribute("RefBaseClassPath");
        break;
      case CaexKind::RoleRequirements:
        element.ref_base_class_path = node.attribute("RefBaseRoleClassPath");
        break;
      case CaexKind::SupportedRoleClass:
        element.ref_base_class_path = node.attribute("RefRoleClassPath");
        break;
      case CaexKind::InternalElement:
        element.ref_base_class_path = node.attribute("RefBaseSystemUnitPath");
        break;
      case CaexKind::InternalLink:
        element.ref_partner_side_a = node.attribute("RefPartnerSideA");
        element.ref_partner_side_b = node.attribute("RefPartnerSideB");
        break;
      default:
        break;
    }
    if (element.kind == CaexKind::Attribute) {
      if (const XmlNode* value = node.first_child("Value")) element.attribute_value = value->text;
    }

    element.path_segments = parent_path;
    element.path_segments.push_back(element.name.empty() ? synthesized_segment(element, ordinal)
                                                         : element.name);
    children_of(node, element);
    return element;
  }

  void children_of(const XmlNode& node, CaexElement& element) {
    std::size_t ordinal = 0;
    for (const auto& child : node.children) {
      if (element.kind == CaexKind::Attribute && child.name == "Value") continue;
      CaexElement converted = convert(child, element.path_segments, ordinal);
      ++ordinal;
      element.children.push_back(std::move(converted));
    }
  }

  CaexClass klass(const XmlNode& node, const std::string& parent_path,
                  const std::string& class_tag) {
    CaexClass cls;
    cls.name = node.attribute("Name").value_or("");
    cls.id = node.attribute("ID");
    cls.ref_base_class_path = node.attribute("RefBaseClassPath");
    cls.path = parent_path + "/" + cls.name;
    std::size_t ordinal = 0;
    for (const auto& child : node.children) {
      if (child.name == class_tag) {
        cls.children.push_back(klass(child, cls.path, class_tag));
      } else {
        std::vector<std::string> base;  // class members do not join instance paths
        cls.elements.push_back(convert(child, base, ordinal));
        ++ordinal;
      }
    }
    return cls;
  }

  CaexLibrary library(const XmlNode& node, LibraryKind kind, const std::string& class_tag) {
    CaexLibrary lib;
    lib.kind = kind;
    lib.name = node.attribute("Name").value_or("");
    for (const auto& child : node.children) {
      if (child.name == class_tag) lib.classes.push_back(klass(child, lib.name, class_tag));
    }
    return lib;
  }

  void index(AmlDocument& doc) {
    for (const auto& hierarchy : doc.instance_hierarchies) index_element(doc, hierarchy);
    for (const auto* lib : doc.all_libraries())
      for (const auto& cls : lib->classes) index_class(doc, cls);
  }

  void index_element(AmlDocument& doc, const CaexElement& element) {
    if (element.id) {
      auto [it, inserted] = doc.id_index.emplace(*element.id, &element);
      if (!inserted) throw DuplicateId(*element.id);
    }
    for (const auto& child : element.children) index_element(doc, child);
  }

  void index_class(AmlDocument& doc, const CaexClass& cls) {
    if (cls.id) {
      auto [it, inserted] = doc.id_index.emplace(*cls.id, &cls);
      if (!inserted) throw DuplicateId(*cls.id);
    }
    for (const auto& element : cls.elements) index_element(doc, element);
    for (const auto& child : cls.children) index_class(doc, child);
  }
};

}  // namespace

AmlDocument parse_aml(const std::string& xml_bytes, const std::string& file_name) {
  XmlNode root;
  try {
    root = parse_xml(xml_bytes);
  } catch (const XmlError& e) {
    throw MalformedXml(std::string(e.what()) + " (" + file_name + ")");
  }
  return DocumentBuilder().build(root, file_name);
}

AmlDocument merge_documents(AmlDocument model, std::vector<AmlDocument> libraries) {
  AmlDocument merged;
  merged.file_name = model.file_name;
  merged.schema_version = model.schema_version;
  merged.instance_hierarchies = std::move(model.instance_hierarchies);
  merged.role_class_libs = std::move(model.role_class_libs);
  merged.interface_class_libs = std::move(model.interface_class_libs);
  merged.system_unit_class_libs = std::move(model.system_unit_class_libs);
  for (auto& doc : libraries) {
    // AR documents contribute libraries only; any sample hierarchies are
    // intentionally dropped.
    for (auto& lib : doc.role_class_libs) merged.role_class_libs.push_back(std::move(lib));
    for (auto& lib : doc.interface_class_libs)
      merged.interface_class_libs.push_back(std::move(lib));
    for (auto& lib : doc.system_unit_class_libs)
      merged.system_unit_class_libs.push_back(std::move(lib));
  }

  // rebuild the index over the merged trees
  struct Indexer {
    AmlDocument& doc;
    void element(const CaexElement& e) {
      if (e.id) {
        auto [it, inserted] = doc.id_index.emplace(*e.id, &e);
        if (!inserted) throw DuplicateId(*e.id);
      }
      for (const auto& child : e.children) element(child);
    }
    void klass(const CaexClass& c) {
      if (c.id) {
        auto [it, inserted] = doc.id_index.emplace(*c.id, &c);
        if (!inserted) throw DuplicateId(*c.id);
      }
      for (const auto& e : c.elements) element(e);
      for (const auto& child : c.children) klass(child);
    }
  } indexer{merged};
  for (const auto& hierarchy : merged.instance_hierarchies) indexer.element(hierarchy);
  for (const auto* lib : merged.all_libraries())
    for (const auto& cls : lib->classes) indexer.klass(cls);
  return merged;
}

}  // namespace amlcheck::caex
