#include "amlcheck/shacl/shapes.hpp"

#include <algorithm>
#include <deque>

namespace amlcheck::shacl {

using rdf::RdfGraph;
using rdf::Term;

namespace {

std::string sh(const char* local) { return std::string(rdf::ns::sh) + local; }

Term sh_term(const char* local) { return Term::iri(sh(local)); }

std::optional<int> parse_count(const Term& term) {
  if (!term.is_literal()) return std::nullopt;
  const auto& lexical = term.as_literal().lexical;
  if (lexical.empty()) return std::nullopt;
  std::size_t i = 0;
  long value = 0;
  for (; i < lexical.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(lexical[i]))) return std::nullopt;
    value = value * 10 + (lexical[i] - '0');
    if (value > 1'000'000'000) return std::nullopt;
  }
  return static_cast<int>(value);
}

}  // namespace

const char* severity_iri(Severity severity) {
  switch (severity) {
    case Severity::Info: return "http://www.w3.org/ns/shacl#Info";
    case Severity::Warning: return "http://www.w3.org/ns/shacl#Warning";
    case Severity::Violation: return "http://www.w3.org/ns/shacl#Violation";
  }
  return "http://www.w3.org/ns/shacl#Violation";
}

PropertyPath PropertyPath::pred(Term iri) {
  PropertyPath p;
  p.kind = Kind::Predicate;
  p.predicate = std::move(iri);
  return p;
}

PropertyPath PropertyPath::inverse(PropertyPath inner) {
  PropertyPath p;
  p.kind = Kind::Inverse;
  p.parts.push_back(std::move(inner));
  return p;
}

PropertyPath PropertyPath::sequence(std::vector<PropertyPath> steps) {
  PropertyPath p;
  p.kind = Kind::Sequence;
  p.parts = std::move(steps);
  return p;
}

PropertyPath PropertyPath::alternative(std::vector<PropertyPath> options) {
  PropertyPath p;
  p.kind = Kind::Alternative;
  p.parts = std::move(options);
  return p;
}

std::string PropertyPath::to_string(const std::map<std::string, std::string>& prefixes) const {
  auto compact = [&](const std::string& iri) {
    for (const auto& [prefix, ns_iri] : prefixes) {
      if (!ns_iri.empty() && iri.rfind(ns_iri, 0) == 0 &&
          iri.find('/', ns_iri.size()) == std::string::npos &&
          iri.find('#', ns_iri.size()) == std::string::npos)
        return prefix + ":" + iri.substr(ns_iri.size());
    }
    return "<" + iri + ">";
  };
  switch (kind) {
    case Kind::Predicate:
      return compact(predicate.as_iri().value);
    case Kind::Inverse:
      return "^" + parts[0].to_string(prefixes);
    case Kind::Sequence: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? "/" : "") + parts[i].to_string(prefixes);
      return out + ")";
    }
    case Kind::Alternative: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? "|" : "") + parts[i].to_string(prefixes);
      return out + ")";
    }
  }
  return "";
}

std::string component_iri(const ConstraintComponent& component) {
  struct Visitor {
    std::string operator()(const MinCount&) { return sh("MinCountConstraintComponent"); }
    std::string operator()(const MaxCount&) { return sh("MaxCountConstraintComponent"); }
    std::string operator()(const ClassConstraint&) { return sh("ClassConstraintComponent"); }
    std::string operator()(const DatatypeConstraint&) { return sh("DatatypeConstraintComponent"); }
    std::string operator()(const NodeKindConstraint&) { return sh("NodeKindConstraintComponent"); }
    std::string operator()(const HasValue&) { return sh("HasValueConstraintComponent"); }
    std::string operator()(const InConstraint&) { return sh("InConstraintComponent"); }
    std::string operator()(const PatternConstraint&) { return sh("PatternConstraintComponent"); }
    std::string operator()(const NodeConstraint&) { return sh("NodeConstraintComponent"); }
    std::string operator()(const NotConstraint&) { return sh("NotConstraintComponent"); }
    std::string operator()(const AndConstraint&) { return sh("AndConstraintComponent"); }
    std::string operator()(const OrConstraint&) { return sh("OrConstraintComponent"); }
    std::string operator()(const QualifiedValueShape&) {
      return sh("QualifiedMinCountConstraintComponent");
    }
  };
  return std::visit(Visitor{}, component);
}

namespace {

class ShapesCompiler {
public:
  explicit ShapesCompiler(const RdfGraph& graph) : graph_(graph) {}

  ShapesGraph run() {
    discover();
    for (const auto& id : discovered_) compile(id);
    return std::move(out_);
  }

private:
  const RdfGraph& graph_;
  ShapesGraph out_;
  std::vector<Term> discovered_;
  std::set<Term> seen_;

  void enqueue(const Term& id) {
    if (id.is_literal()) throw IllFormedShapeError("a literal cannot be a shape");
    if (seen_.insert(id).second) discovered_.push_back(id);
  }

  void discover() {
    const Term type = Term::iri(rdf::iris::rdf_type);
    for (const auto& t : graph_.match(std::nullopt, type, sh_term("NodeShape"))) enqueue(t.subject);
    for (const auto& t : graph_.match(std::nullopt, type, sh_term("PropertyShape")))
      enqueue(t.subject);
    for (const char* target :
         {"targetClass", "targetNode", "targetSubjectsOf", "targetObjectsOf"}) {
      for (const auto& t : graph_.match(std::nullopt, sh_term(target), std::nullopt))
        enqueue(t.subject);
    }
    // shape-valued parameters, followed to a fixpoint
    std::size_t cursor = 0;
    auto enqueue_list = [&](const Term& head) {
      auto items = graph_.collection(head);
      if (!items) throw IllFormedShapeError("sh:and/sh:or expects an RDF list");
      for (const auto& item : *items) enqueue(item);
    };
    // seed with direct references from anywhere in the graph, then chase
    for (const char* param : {"property", "node", "not", "qualifiedValueShape"}) {
      for (const auto& t : graph_.match(std::nullopt, sh_term(param), std::nullopt))
        enqueue(t.object);
    }
    for (const char* param : {"and", "or"}) {
      for (const auto& t : graph_.match(std::nullopt, sh_term(param), std::nullopt))
        enqueue_list(t.object);
    }
    (void)cursor;
  }

  bool typed_as(const Term& id, const char* klass) const {
    return graph_.contains(
        rdf::Triple(id, Term::iri(rdf::iris::rdf_type), sh_term(klass)));
  }

  bool referenced_as_property(const Term& id) const {
    return !graph_.subjects_of(sh_term("property"), id).empty();
  }

  std::string describe(const Term& id) const {
    return id.is_iri() ? "<" + id.as_iri().value + ">" : "_:" + id.as_blank().label;
  }

  std::optional<PropertyPath> parse_path(const Term& node, const Term& shape_id) {
    if (node.is_iri()) return PropertyPath::pred(node);
    if (node.is_literal()) throw IllFormedShapeError("literal in sh:path");

    for (const char* unsupported : {"zeroOrMorePath", "oneOrMorePath", "zeroOrOnePath"}) {
      if (graph_.first_object(node, sh_term(unsupported))) {
        out_.unsupported.push_back({shape_id, sh(unsupported)});
        return std::nullopt;
      }
    }
    if (auto inner = graph_.first_object(node, sh_term("inversePath"))) {
      auto parsed = parse_path(*inner, shape_id);
      if (!parsed) return std::nullopt;
      return PropertyPath::inverse(std::move(*parsed));
    }
    if (auto alternatives = graph_.first_object(node, sh_term("alternativePath"))) {
      auto items = graph_.collection(*alternatives);
      if (!items || items->empty())
        throw IllFormedShapeError("sh:alternativePath expects a non-empty RDF list at shape " +
                                  describe(shape_id));
      std::vector<PropertyPath> options;
      for (const auto& item : *items) {
        auto parsed = parse_path(item, shape_id);
        if (!parsed) return std::nullopt;
        options.push_back(std::move(*parsed));
      }
      return PropertyPath::alternative(std::move(options));
    }
    if (auto items = graph_.collection(node)) {
      if (items->empty())
        throw IllFormedShapeError("empty sequence path at shape " + describe(shape_id));
      std::vector<PropertyPath> steps;
      for (const auto& item : *items) {
        auto parsed = parse_path(item, shape_id);
        if (!parsed) return std::nullopt;
        steps.push_back(std::move(*parsed));
      }
      return PropertyPath::sequence(std::move(steps));
    }
    throw IllFormedShapeError("unrecognized sh:path expression at shape " + describe(shape_id));
  }

  void compile(const Term& id) {
    Shape shape;
    shape.id = id;

    bool path_unsupported = false;
    if (auto path_node = graph_.first_object(id, sh_term("path"))) {
      if (typed_as(id, "NodeShape"))
        throw IllFormedShapeError("node shape " + describe(id) + " must not have sh:path");
      auto parsed = parse_path(*path_node, id);
      if (parsed) {
        shape.path = std::move(*parsed);
        shape.is_property_shape = true;
      } else {
        path_unsupported = true;  // diagnostic already recorded; skip this shape
      }
    } else if (typed_as(id, "PropertyShape") || referenced_as_property(id)) {
      throw IllFormedShapeError("property shape " + describe(id) + " has no sh:path");
    }

    for (const char* target : {"targetClass", "targetNode", "targetSubjectsOf", "targetObjectsOf"}) {
      for (const auto& value : graph_.objects_of(id, sh_term(target))) {
        Target::Kind kind = Target::Kind::Node;
        if (std::string(target) == "targetClass") kind = Target::Kind::Class;
        if (std::string(target) == "targetSubjectsOf") kind = Target::Kind::SubjectsOf;
        if (std::string(target) == "targetObjectsOf") kind = Target::Kind::ObjectsOf;
        shape.targets.push_back({kind, value});
      }
    }
    if (graph_.contains(rdf::Triple(id, Term::iri(rdf::iris::rdf_type),
                                    Term::iri(rdf::iris::rdfs_class))))
      shape.targets.push_back({Target::Kind::ImplicitClass, id});

    if (auto severity = graph_.first_object(id, sh_term("severity"))) {
      if (*severity == sh_term("Info"))
        shape.severity = Severity::Info;
      else if (*severity == sh_term("Warning"))
        shape.severity = Severity::Warning;
      else
        shape.severity = Severity::Violation;
    }
    for (const auto& message : graph_.objects_of(id, sh_term("message")))
      if (message.is_literal()) shape.messages.push_back(message.as_literal().lexical);
    std::sort(shape.messages.begin(), shape.messages.end());

    compile_components(id, shape);

    if (!shape.is_property_shape) {
      for (const auto& component : shape.components) {
        if (std::holds_alternative<MinCount>(component) ||
            std::holds_alternative<MaxCount>(component) ||
            std::holds_alternative<QualifiedValueShape>(component))
          throw IllFormedShapeError("cardinality constraint on shape " + describe(id) +
                                    " requires a property shape (sh:path)");
      }
    }

    if (!path_unsupported) out_.shapes.emplace(id, std::move(shape));
  }

  void compile_components(const Term& id, Shape& shape) {
    static const std::set<std::string> structural = {
        sh("path"), sh("property"), sh("severity"), sh("message"), sh("targetClass"),
        sh("targetNode"), sh("targetSubjectsOf"), sh("targetObjectsOf"),
        // non-validating annotations
        sh("name"), sh("description"), sh("order"), sh("group"), sh("defaultValue"),
        // handled together with their main parameter
        sh("flags"), sh("qualifiedMinCount"), sh("qualifiedMaxCount")};

    bool saw_qualified_shape = false;
    for (const auto& t : graph_.match(id, std::nullopt, std::nullopt)) {
      const std::string& p = t.predicate.as_iri().value;
      if (p.rfind(rdf::ns::sh, 0) != 0) continue;  // other vocabularies are fine
      if (structural.count(p)) {
        if (p == sh("property")) shape.property_children.push_back(t.object);
        continue;
      }
      const Term& o = t.object;
      if (p == sh("minCount")) {
        auto n = parse_count(o);
        if (!n) throw IllFormedShapeError("sh:minCount expects a non-negative integer");
        shape.components.push_back(MinCount{*n});
      } else if (p == sh("maxCount")) {
        auto n = parse_count(o);
        if (!n) throw IllFormedShapeError("sh:maxCount expects a non-negative integer");
        shape.components.push_back(MaxCount{*n});
      } else if (p == sh("class")) {
        if (!o.is_iri()) throw IllFormedShapeError("sh:class expects an IRI");
        shape.components.push_back(ClassConstraint{o});
      } else if (p == sh("datatype")) {
        if (!o.is_iri()) throw IllFormedShapeError("sh:datatype expects an IRI");
        shape.components.push_back(DatatypeConstraint{o});
      } else if (p == sh("nodeKind")) {
        static const std::set<std::string> kinds = {
            sh("IRI"), sh("BlankNode"), sh("Literal"), sh("BlankNodeOrIRI"),
            sh("BlankNodeOrLiteral"), sh("IRIOrLiteral")};
        if (!o.is_iri() || !kinds.count(o.as_iri().value))
          throw IllFormedShapeError("sh:nodeKind expects one of the six node kind IRIs");
        shape.components.push_back(NodeKindConstraint{o});
      } else if (p == sh("hasValue")) {
        shape.components.push_back(HasValue{o});
      } else if (p == sh("in")) {
        auto items = graph_.collection(o);
        if (!items) throw IllFormedShapeError("sh:in expects an RDF list");
        shape.components.push_back(InConstraint{*items});
      } else if (p == sh("pattern")) {
        if (!o.is_literal()) throw IllFormedShapeError("sh:pattern expects a string literal");
        PatternConstraint pattern;
        pattern.pattern = o.as_literal().lexical;
        if (auto flags = graph_.first_object(id, sh_term("flags")))
          if (flags->is_literal()) pattern.flags = flags->as_literal().lexical;
        auto mode = std::regex::ECMAScript;
        if (pattern.flags.find('i') != std::string::npos) mode |= std::regex::icase;
        try {
          pattern.compiled = std::regex(pattern.pattern, mode);
        } catch (const std::regex_error& e) {
          throw IllFormedShapeError("sh:pattern does not compile: " + pattern.pattern);
        }
        shape.components.push_back(std::move(pattern));
      } else if (p == sh("node")) {
        shape.components.push_back(NodeConstraint{o});
      } else if (p == sh("not")) {
        shape.components.push_back(NotConstraint{o});
      } else if (p == sh("and") || p == sh("or")) {
        auto items = graph_.collection(o);
        if (!items) throw IllFormedShapeError("sh:and/sh:or expects an RDF list");
        if (p == sh("and"))
          shape.components.push_back(AndConstraint{*items});
        else
          shape.components.push_back(OrConstraint{*items});
      } else if (p == sh("qualifiedValueShape")) {
        saw_qualified_shape = true;
        QualifiedValueShape qvs;
        qvs.shape = o;
        if (auto n = graph_.first_object(id, sh_term("qualifiedMinCount"))) {
          qvs.min_count = parse_count(*n);
          if (!qvs.min_count)
            throw IllFormedShapeError("sh:qualifiedMinCount expects a non-negative integer");
        }
        if (auto n = graph_.first_object(id, sh_term("qualifiedMaxCount"))) {
          qvs.max_count = parse_count(*n);
          if (!qvs.max_count)
            throw IllFormedShapeError("sh:qualifiedMaxCount expects a non-negative integer");
        }
        shape.components.push_back(std::move(qvs));
      } else {
        out_.unsupported.push_back({id, p});
      }
    }

    if (!saw_qualified_shape &&
        (graph_.first_object(id, sh_term("qualifiedMinCount")) ||
         graph_.first_object(id, sh_term("qualifiedMaxCount"))))
      throw IllFormedShapeError("sh:qualifiedMinCount/MaxCount without sh:qualifiedValueShape at " +
                                describe(id));
  }
};

}  // namespace

ShapesGraph parse_shapes(const RdfGraph& graph) {
  return ShapesCompiler(graph).run();
}

}  // namespace amlcheck::shacl
