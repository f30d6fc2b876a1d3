#include <set>

#include "amlcheck/caex/model.hpp"

namespace amlcheck::caex {

namespace {

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> segments;
  std::string current;
  for (char c : path) {
    if (c == '/') {
      segments.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  segments.push_back(current);
  return segments;
}

const CaexClass* find_class(const std::vector<CaexClass>& classes, const std::string& name) {
  for (const auto& cls : classes)
    if (cls.name == name) return &cls;
  return nullptr;
}

const CaexElement* find_interface_by_name_path(const CaexElement& element,
                                               const std::string& element_name,
                                               const std::string& interface_name) {
  if (element.kind == CaexKind::InternalElement && element.name == element_name) {
    for (const auto& child : element.children)
      if (child.kind == CaexKind::ExternalInterface && child.name == interface_name) return &child;
  }
  for (const auto& child : element.children) {
    if (const CaexElement* found =
            find_interface_by_name_path(child, element_name, interface_name))
      return found;
  }
  return nullptr;
}

}  // namespace

const CaexClass* resolve_class_path(const AmlDocument& doc, const std::string& caex_path) {
  auto segments = split_path(caex_path);
  if (segments.size() < 2) return nullptr;
  for (const auto* lib : doc.all_libraries()) {
    if (lib->name != segments[0]) continue;
    const CaexClass* current = find_class(lib->classes, segments[1]);
    for (std::size_t i = 2; current && i < segments.size(); ++i)
      current = find_class(current->children, segments[i]);
    if (current) return current;
  }
  return nullptr;
}

Ancestry class_ancestry(const AmlDocument& doc, const CaexClass& cls) {
  Ancestry ancestry;
  std::set<const CaexClass*> seen;
  const CaexClass* current = &cls;
  while (current) {
    if (!seen.insert(current).second) {
      ancestry.cyclic = true;
      break;
    }
    ancestry.chain.push_back(current);
    if (!current->ref_base_class_path) break;
    current = resolve_class_path(doc, *current->ref_base_class_path);
  }
  return ancestry;
}

const CaexElement* resolve_interface_ref(const AmlDocument& doc, const std::string& ref) {
  if (const CaexElement* element = doc.element_by_id(ref)) {
    if (element->kind == CaexKind::ExternalInterface) return element;
  }
  auto colon = ref.find(':');
  if (colon == std::string::npos) return nullptr;
  std::string element_name = ref.substr(0, colon);
  std::string interface_name = ref.substr(colon + 1);
  for (const auto& hierarchy : doc.instance_hierarchies) {
    if (const CaexElement* found =
            find_interface_by_name_path(hierarchy, element_name, interface_name))
      return found;
  }
  return nullptr;
}

}  // namespace amlcheck::caex
