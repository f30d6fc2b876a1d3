#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace amlcheck::caex {

class CaexError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input is not well-formed XML.
class MalformedXml : public CaexError {
  using CaexError::CaexError;
};

/// Root element is not CAEXFile.
class NotCaex : public CaexError {
  using CaexError::CaexError;
};

/// Two elements share an ID attribute value.
class DuplicateId : public CaexError {
public:
  explicit DuplicateId(const std::string& id)
      : CaexError("duplicate ID '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

private:
  std::string id_;
};

enum class CaexKind {
  InternalElement,
  ExternalInterface,
  InternalLink,
  Attribute,
  RoleRequirements,
  SupportedRoleClass,
  InstanceHierarchy,
  Unknown,  // vendor extensions, preserved as opaque children
};

const char* to_string(CaexKind kind);

struct CaexElement {
  CaexKind kind = CaexKind::Unknown;
  std::string name;
  std::optional<std::string> id;
  /// RefBaseClassPath / RefBaseRoleClassPath / RefRoleClassPath /
  /// RefBaseSystemUnitPath, normalized into one slot.
  std::optional<std::string> ref_base_class_path;
  std::optional<std::string> ref_partner_side_a;  // InternalLink only
  std::optional<std::string> ref_partner_side_b;  // InternalLink only
  std::optional<std::string> attribute_value;     // Attribute only
  /// Original tag name for kind=Unknown nodes.
  std::string xml_name;
  /// Name segments from the hierarchy root down to this element; nameless
  /// elements get a synthesized "<Kind>_<ordinal>" segment.
  std::vector<std::string> path_segments;
  std::vector<CaexElement> children;
};

enum class LibraryKind { RoleClassLib, InterfaceClassLib, SystemUnitClassLib };

const char* to_string(LibraryKind kind);

struct CaexClass {
  std::string name;
  std::optional<std::string> id;
  std::optional<std::string> ref_base_class_path;
  /// CAEX path of this class: "LibName/Outer/Inner".
  std::string path;
  std::vector<CaexClass> children;
  /// Attributes and interfaces declared on the class, preserved verbatim.
  std::vector<CaexElement> elements;
};

struct CaexLibrary {
  std::string name;
  LibraryKind kind = LibraryKind::RoleClassLib;
  std::vector<CaexClass> classes;
};

using IdHandle = std::variant<const CaexElement*, const CaexClass*>;

/// Parsed CAEX document. Immutable after parsing; the id_index holds
/// pointers into the element/class trees, so documents are move-only.
struct AmlDocument {
  std::string file_name;
  std::string schema_version;
  std::vector<CaexElement> instance_hierarchies;
  std::vector<CaexLibrary> role_class_libs;
  std::vector<CaexLibrary> interface_class_libs;
  std::vector<CaexLibrary> system_unit_class_libs;
  std::map<std::string, IdHandle> id_index;

  AmlDocument() = default;
  AmlDocument(const AmlDocument&) = delete;
  AmlDocument& operator=(const AmlDocument&) = delete;
  AmlDocument(AmlDocument&&) = default;
  AmlDocument& operator=(AmlDocument&&) = default;

  const CaexElement* element_by_id(const std::string& id) const;

  /// All libraries in declaration order.
  std::vector<const CaexLibrary*> all_libraries() const;
};

/// Parses an AML/CAEX XML document. Accepts both CAEX 2.15 and 3.0 element
/// spellings; unknown elements are preserved, never an error.
AmlDocument parse_aml(const std::string& xml_bytes, const std::string& file_name);

/// Walks "Lib/Class/Nested" segments; absence is a value, not an error.
const CaexClass* resolve_class_path(const AmlDocument& doc, const std::string& caex_path);

struct Ancestry {
  std::vector<const CaexClass*> chain;  // starts with the class itself
  bool cyclic = false;                  // truncated at the first repeat
};

Ancestry class_ancestry(const AmlDocument& doc, const CaexClass& cls);

/// Resolves an InternalLink partner reference, first as an interface ID,
/// then as an "ElementName:InterfaceName" path.
const CaexElement* resolve_interface_ref(const AmlDocument& doc, const std::string& ref);

/// Combines a model document with AR library documents: hierarchies come from
/// the model, libraries from everywhere. IDs must stay globally unique.
AmlDocument merge_documents(AmlDocument model, std::vector<AmlDocument> libraries);

}  // namespace amlcheck::caex
