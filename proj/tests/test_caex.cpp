#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amlcheck/caex/model.hpp"
#include "amlcheck/caex/xml.hpp"
#include "support/io.hpp"

using namespace amlcheck::caex;

namespace {

// independent node count: occurrences of "<Tag " / "<Tag>" / "<Tag/>" in the raw text
std::size_t count_tag(const std::string& xml, const std::string& tag) {
  std::size_t count = 0;
  std::string open = "<" + tag;
  for (std::size_t at = xml.find(open); at != std::string::npos; at = xml.find(open, at + 1)) {
    char next = at + open.size() < xml.size() ? xml[at + open.size()] : '\0';
    if (next == ' ' || next == '>' || next == '/' || next == '\t' || next == '\n') ++count;
  }
  return count;
}

std::size_t count_elements(const CaexElement& element, CaexKind kind) {
  std::size_t n = element.kind == kind ? 1 : 0;
  for (const auto& child : element.children) n += count_elements(child, kind);
  return n;
}

void collect_classes(const CaexClass& cls, std::vector<const CaexClass*>& out) {
  out.push_back(&cls);
  for (const auto& child : cls.children) collect_classes(child, out);
}

}  // namespace

TEST_CASE("xml reader handles attributes, nesting, entities, and CDATA") {
  auto root = parse_xml(R"(<?xml version="1.0"?>
<!-- prolog comment -->
<Root a="1" b="x &amp; y">
  <Child>text &#x41;<![CDATA[<raw>]]></Child>
  <ns:Spaced xmlns:ns="http://x/"/>
</Root>)");
  CHECK(root.name == "Root");
  CHECK(root.attribute("a") == "1");
  CHECK(root.attribute("b") == "x & y");
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].text == "text A<raw>");
  CHECK(root.children[1].name == "Spaced");  // namespace prefix stripped
}

TEST_CASE("xml reader rejects malformed input with a line number") {
  CHECK_THROWS_AS(parse_xml("<a><b></a>"), XmlError);
  CHECK_THROWS_AS(parse_xml("<a foo=bar/>"), XmlError);
  CHECK_THROWS_AS(parse_xml("<a>&unknown;</a>"), XmlError);
  try {
    parse_xml("<a>\n<b>\n</wrong>\n</a>");
    FAIL("expected XmlError");
  } catch (const XmlError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("a minimal CAEX file parses into one hierarchy with one element") {
  auto doc = parse_aml(R"(<?xml version="1.0"?>
<CAEXFile FileName="m.aml" SchemaVersion="2.15">
  <InstanceHierarchy Name="H">
    <InternalElement Name="A" ID="id-a"/>
  </InstanceHierarchy>
</CAEXFile>)",
                       "m.aml");
  REQUIRE(doc.instance_hierarchies.size() == 1);
  REQUIRE(doc.instance_hierarchies[0].children.size() == 1);
  CHECK(doc.instance_hierarchies[0].children[0].name == "A");
  CHECK(doc.instance_hierarchies[0].children[0].kind == CaexKind::InternalElement);
  CHECK(doc.role_class_libs.empty());
  CHECK(doc.interface_class_libs.empty());
  CHECK(doc.system_unit_class_libs.empty());
}

TEST_CASE("the AR APC fixture declares the LogicalEndPoint interface class") {
  auto doc = parse_aml(testsupport::read_fixture("aml/ar_apc.aml"), "ar_apc.aml");
  REQUIRE(doc.interface_class_libs.size() == 1);
  bool found = false;
  for (const auto& cls : doc.interface_class_libs[0].classes)
    if (cls.name == "LogicalEndPoint") found = true;
  CHECK(found);
}

TEST_CASE("truncated XML raises MalformedXml") {
  CHECK_THROWS_AS(parse_aml("<CAEXFile><InstanceHierarchy Name=\"H\">", "t.aml"), MalformedXml);
}

TEST_CASE("a non-CAEX root raises NotCaex") {
  CHECK_THROWS_AS(parse_aml("<SomethingElse/>", "t.xml"), NotCaex);
}

TEST_CASE("duplicate IDs raise DuplicateId") {
  CHECK_THROWS_AS(parse_aml(R"(<CAEXFile FileName="m.aml">
  <InstanceHierarchy Name="H">
    <InternalElement Name="A" ID="same"/>
    <InternalElement Name="B" ID="same"/>
  </InstanceHierarchy>
</CAEXFile>)",
                            "m.aml"),
                  DuplicateId);
}

TEST_CASE("unknown elements are preserved as opaque children") {
  auto doc = parse_aml(R"(<CAEXFile FileName="m.aml">
  <InstanceHierarchy Name="H">
    <InternalElement Name="A">
      <VendorExtension foo="1"><Inner/></VendorExtension>
    </InternalElement>
  </InstanceHierarchy>
</CAEXFile>)",
                       "m.aml");
  const auto& element = doc.instance_hierarchies[0].children[0];
  REQUIRE(element.children.size() == 1);
  CHECK(element.children[0].kind == CaexKind::Unknown);
  CHECK(element.children[0].xml_name == "VendorExtension");
  CHECK(element.children[0].children.size() == 1);
}

TEST_CASE("both CAEX role reference spellings normalize to the same slot") {
  auto doc = parse_aml(R"(<CAEXFile FileName="m.aml">
  <InstanceHierarchy Name="H">
    <InternalElement Name="Old">
      <RoleRequirements RefBaseRoleClassPath="Lib/Role"/>
    </InternalElement>
    <InternalElement Name="New">
      <SupportedRoleClass RefRoleClassPath="Lib/Role"/>
    </InternalElement>
  </InstanceHierarchy>
</CAEXFile>)",
                       "m.aml");
  const auto& old_style = doc.instance_hierarchies[0].children[0].children[0];
  const auto& new_style = doc.instance_hierarchies[0].children[1].children[0];
  CHECK(old_style.kind == CaexKind::RoleRequirements);
  CHECK(new_style.kind == CaexKind::SupportedRoleClass);
  CHECK(old_style.ref_base_class_path == "Lib/Role");
  CHECK(new_style.ref_base_class_path == "Lib/Role");
}

TEST_CASE("attribute values are captured from the Value child") {
  auto doc = parse_aml(testsupport::read_fixture("aml/example_violating.aml"),
                       "example_violating.aml");
  const auto& project = doc.instance_hierarchies[0].children[0];
  const auto& subnet = project.children[0];
  REQUIRE(subnet.children[0].kind == CaexKind::Attribute);
  CHECK(subnet.children[0].attribute_value == "Ethernet");
}

TEST_CASE("every element in the XML appears exactly once in the tree") {
  for (const char* fixture : {"aml/example_violating.aml", "aml/example_corrected.aml"}) {
    std::string xml = testsupport::read_fixture(fixture);
    auto doc = parse_aml(xml, fixture);
    std::size_t elements = 0, interfaces = 0, links = 0;
    for (const auto& hierarchy : doc.instance_hierarchies) {
      elements += count_elements(hierarchy, CaexKind::InternalElement);
      interfaces += count_elements(hierarchy, CaexKind::ExternalInterface);
      links += count_elements(hierarchy, CaexKind::InternalLink);
    }
    CHECK(elements == count_tag(xml, "InternalElement"));
    CHECK(interfaces == count_tag(xml, "ExternalInterface"));
    CHECK(links == count_tag(xml, "InternalLink"));
  }
}

TEST_CASE("id_index lookups return the element carrying that ID") {
  auto doc = parse_aml(testsupport::read_fixture("aml/example_violating.aml"),
                       "example_violating.aml");
  for (const auto& [id, handle] : doc.id_index) {
    if (const auto* const* element = std::get_if<const CaexElement*>(&handle)) {
      REQUIRE((*element)->id == id);
    }
  }
  CHECK(doc.element_by_id("iface-se-a") != nullptr);
  CHECK(doc.element_by_id("no-such-id") == nullptr);
}

TEST_CASE("resolve_class_path walks library and nested segments") {
  auto ar = parse_aml(testsupport::read_fixture("aml/ar_apc.aml"), "ar_apc.aml");
  const CaexClass* lep = resolve_class_path(ar, "CommunicationInterfaceClassLib/LogicalEndPoint");
  REQUIRE(lep != nullptr);
  CHECK(lep->name == "LogicalEndPoint");

  CHECK(resolve_class_path(ar, "NoSuchLib/X") == nullptr);
  CHECK(resolve_class_path(ar, "CommunicationInterfaceClassLib/NoSuchClass") == nullptr);
  CHECK(resolve_class_path(ar, "LogicalEndPoint") == nullptr);  // needs a library segment

  // nested two levels deep
  auto nested = parse_aml(R"(<CAEXFile FileName="libs.aml">
  <RoleClassLib Name="Lib">
    <RoleClass Name="Outer">
      <RoleClass Name="Middle">
        <RoleClass Name="Inner"/>
      </RoleClass>
    </RoleClass>
  </RoleClassLib>
</CAEXFile>)",
                          "libs.aml");
  const CaexClass* inner = resolve_class_path(nested, "Lib/Outer/Middle/Inner");
  REQUIRE(inner != nullptr);
  CHECK(inner->name == "Inner");
  CHECK(inner->path == "Lib/Outer/Middle/Inner");
}

TEST_CASE("resolve_class_path round-trips every class path") {
  auto ar = parse_aml(testsupport::read_fixture("aml/ar_apc.aml"), "ar_apc.aml");
  std::vector<const CaexClass*> classes;
  for (const auto* lib : ar.all_libraries())
    for (const auto& cls : lib->classes) collect_classes(cls, classes);
  REQUIRE(classes.size() == 5);
  for (const auto* cls : classes) CHECK(resolve_class_path(ar, cls->path) == cls);
}

TEST_CASE("class_ancestry follows base class chains") {
  auto ar = parse_aml(testsupport::read_fixture("aml/ar_apc.aml"), "ar_apc.aml");

  const CaexClass* base = resolve_class_path(ar, "CommunicationInterfaceClassLib/CommunicationInterface");
  auto trivial = class_ancestry(ar, *base);
  CHECK(trivial.chain == std::vector<const CaexClass*>{base});
  CHECK_FALSE(trivial.cyclic);

  const CaexClass* lep = resolve_class_path(ar, "CommunicationInterfaceClassLib/LogicalEndPoint");
  auto chain = class_ancestry(ar, *lep);
  REQUIRE(chain.chain.size() == 2);
  CHECK(chain.chain[0] == lep);
  CHECK(chain.chain[1] == base);

  // three-class chain and a cycle
  auto doc = parse_aml(R"(<CAEXFile FileName="libs.aml">
  <RoleClassLib Name="L">
    <RoleClass Name="A"/>
    <RoleClass Name="B" RefBaseClassPath="L/A"/>
    <RoleClass Name="C" RefBaseClassPath="L/B"/>
    <RoleClass Name="X" RefBaseClassPath="L/Y"/>
    <RoleClass Name="Y" RefBaseClassPath="L/X"/>
  </RoleClassLib>
</CAEXFile>)",
                       "libs.aml");
  auto c_chain = class_ancestry(*&doc, *resolve_class_path(doc, "L/C"));
  REQUIRE(c_chain.chain.size() == 3);
  CHECK(c_chain.chain[0]->name == "C");
  CHECK(c_chain.chain[1]->name == "B");
  CHECK(c_chain.chain[2]->name == "A");
  CHECK_FALSE(c_chain.cyclic);

  auto cycle = class_ancestry(doc, *resolve_class_path(doc, "L/X"));
  REQUIRE(cycle.chain.size() == 2);
  CHECK(cycle.chain[0]->name == "X");
  CHECK(cycle.chain[1]->name == "Y");
  CHECK(cycle.cyclic);
}

TEST_CASE("interface references resolve by ID and by name path") {
  auto doc = parse_aml(testsupport::read_fixture("aml/example_violating.aml"),
                       "example_violating.aml");

  const CaexElement* by_id = resolve_interface_ref(doc, "iface-se-a");
  REQUIRE(by_id != nullptr);
  CHECK(by_id->name == "SubnetEndpointA");

  CHECK(resolve_interface_ref(doc, "dangling-id") == nullptr);

  const CaexElement* by_path = resolve_interface_ref(doc, "ExampleSubnet:SubnetEndpointA");
  REQUIRE(by_path != nullptr);
  CHECK(by_path == by_id);
  CHECK(resolve_interface_ref(doc, "ExampleSubnet:NoSuchInterface") == nullptr);
}

TEST_CASE("merge_documents pools libraries and keeps IDs unique") {
  auto model = parse_aml(testsupport::read_fixture("aml/example_violating.aml"),
                         "example_violating.aml");
  std::vector<AmlDocument> ars;
  ars.push_back(parse_aml(testsupport::read_fixture("aml/ar_apc.aml"), "ar_apc.aml"));
  auto merged = merge_documents(std::move(model), std::move(ars));

  CHECK(merged.instance_hierarchies.size() == 1);
  CHECK(resolve_class_path(merged, "CommunicationInterfaceClassLib/LogicalEndPoint") != nullptr);
  CHECK(merged.element_by_id("iface-plain") != nullptr);

  auto a = parse_aml(R"(<CAEXFile FileName="a.aml"><InstanceHierarchy Name="H">
    <InternalElement Name="A" ID="clash"/></InstanceHierarchy></CAEXFile>)",
                     "a.aml");
  std::vector<AmlDocument> clashing;
  clashing.push_back(parse_aml(R"(<CAEXFile FileName="b.aml"><RoleClassLib Name="L">
    <RoleClass Name="R" ID="clash"/></RoleClassLib></CAEXFile>)",
                               "b.aml"));
  CHECK_THROWS_AS(merge_documents(std::move(a), std::move(clashing)), DuplicateId);
}
