#include "amlcheck/shacl/validate.hpp"

#include <algorithm>
#include <deque>

namespace amlcheck::shacl {

using rdf::RdfGraph;
using rdf::Term;

namespace {

std::string sh(const char* local) { return std::string(rdf::ns::sh) + local; }

std::string show(const Term& t) {
  if (t.is_iri()) return "<" + t.as_iri().value + ">";
  if (t.is_blank()) return "_:" + t.as_blank().label;
  return "\"" + t.as_literal().lexical + "\"";
}

}  // namespace

std::set<Term> instances_of(const RdfGraph& data, const Term& class_iri) {
  // all classes that reach class_iri through rdfs:subClassOf chains
  std::set<Term> classes{class_iri};
  std::deque<Term> queue{class_iri};
  const Term sub = Term::iri(rdf::iris::rdfs_sub_class_of);
  while (!queue.empty()) {
    Term current = queue.front();
    queue.pop_front();
    for (const auto& subclass : data.subjects_of(sub, current))
      if (classes.insert(subclass).second) queue.push_back(subclass);
  }
  std::set<Term> nodes;
  const Term type = Term::iri(rdf::iris::rdf_type);
  for (const auto& t : data.match(std::nullopt, type, std::nullopt))
    if (classes.count(t.object)) nodes.insert(t.subject);
  return nodes;
}

std::set<Term> resolve_targets(const Shape& shape, const RdfGraph& data) {
  std::set<Term> out;
  for (const auto& target : shape.targets) {
    switch (target.kind) {
      case Target::Kind::Class:
      case Target::Kind::ImplicitClass: {
        auto nodes = instances_of(data, target.value);
        out.insert(nodes.begin(), nodes.end());
        break;
      }
      case Target::Kind::Node:
        out.insert(target.value);
        break;
      case Target::Kind::SubjectsOf:
        for (const auto& t : data.match(std::nullopt, target.value, std::nullopt))
          out.insert(t.subject);
        break;
      case Target::Kind::ObjectsOf:
        for (const auto& t : data.match(std::nullopt, target.value, std::nullopt))
          out.insert(t.object);
        break;
    }
  }
  return out;
}

std::set<Term> evaluate_path(const PropertyPath& path, const Term& node, const RdfGraph& data) {
  std::set<Term> out;
  switch (path.kind) {
    case PropertyPath::Kind::Predicate: {
      if (node.is_literal()) break;  // literals have no outgoing edges
      for (const auto& o : data.objects_of(node, path.predicate)) out.insert(o);
      break;
    }
    case PropertyPath::Kind::Inverse: {
      const PropertyPath& inner = path.parts[0];
      switch (inner.kind) {
        case PropertyPath::Kind::Predicate:
          for (const auto& s : data.subjects_of(inner.predicate, node)) out.insert(s);
          break;
        case PropertyPath::Kind::Inverse:
          return evaluate_path(inner.parts[0], node, data);
        case PropertyPath::Kind::Sequence: {
          // ^(a/b) == ^b/^a
          std::vector<PropertyPath> reversed;
          for (auto it = inner.parts.rbegin(); it != inner.parts.rend(); ++it)
            reversed.push_back(PropertyPath::inverse(*it));
          return evaluate_path(PropertyPath::sequence(std::move(reversed)), node, data);
        }
        case PropertyPath::Kind::Alternative: {
          std::vector<PropertyPath> options;
          for (const auto& option : inner.parts) options.push_back(PropertyPath::inverse(option));
          return evaluate_path(PropertyPath::alternative(std::move(options)), node, data);
        }
      }
      break;
    }
    case PropertyPath::Kind::Sequence: {
      std::set<Term> frontier{node};
      for (const auto& step : path.parts) {
        std::set<Term> next;
        for (const auto& n : frontier) {
          auto reached = evaluate_path(step, n, data);
          next.insert(reached.begin(), reached.end());
        }
        frontier = std::move(next);
      }
      out = std::move(frontier);
      break;
    }
    case PropertyPath::Kind::Alternative: {
      for (const auto& option : path.parts) {
        auto reached = evaluate_path(option, node, data);
        out.insert(reached.begin(), reached.end());
      }
      break;
    }
  }
  return out;
}

namespace {

class Validator {
public:
  Validator(const RdfGraph& data, const ShapesGraph& shapes) : data_(data), shapes_(shapes) {}

  ValidationReport run() {
    ValidationReport report;
    for (const auto& [id, shape] : shapes_.shapes) {
      if (shape.targets.empty()) continue;
      for (const auto& focus : resolve_targets(shape, data_))
        validate_at(focus, shape, report.results);
    }
    sort_and_dedupe(report.results);
    report.conforms = std::none_of(
        report.results.begin(), report.results.end(),
        [](const ValidationResult& r) { return r.severity == Severity::Violation; });
    return report;
  }

private:
  const RdfGraph& data_;
  const ShapesGraph& shapes_;
  std::set<std::pair<Term, Term>> visiting_;  // (shape id, node)
  std::map<Term, std::set<Term>> instance_cache_;

  const std::set<Term>& instances(const Term& class_iri) {
    auto it = instance_cache_.find(class_iri);
    if (it == instance_cache_.end())
      it = instance_cache_.emplace(class_iri, instances_of(data_, class_iri)).first;
    return it->second;
  }

  bool conforms(const Term& node, const Term& shape_id) {
    const Shape* shape = shapes_.find(shape_id);
    if (!shape) return true;  // undescribed shape constrains nothing
    std::vector<ValidationResult> probe;
    validate_at(node, *shape, probe);
    return probe.empty();
  }

  void validate_at(const Term& focus, const Shape& shape, std::vector<ValidationResult>& out) {
    auto key = std::make_pair(shape.id, focus);
    if (!visiting_.insert(key).second) return;  // recursive re-entry conforms

    std::set<Term> values;
    if (shape.is_property_shape) {
      values = evaluate_path(*shape.path, focus, data_);
    } else {
      values.insert(focus);
    }

    for (const auto& component : shape.components)
      apply(component, focus, shape, values, out);

    for (const auto& child_id : shape.property_children) {
      const Shape* child = shapes_.find(child_id);
      if (!child) continue;  // skipped (unsupported path) or undescribed
      if (shape.is_property_shape) {
        for (const auto& value : values) validate_at(value, *child, out);
      } else {
        validate_at(focus, *child, out);
      }
    }

    visiting_.erase(key);
  }

  void emit(std::vector<ValidationResult>& out, const Term& focus, const Shape& shape,
            const std::string& component, const std::optional<Term>& value,
            const std::string& generated_message) {
    ValidationResult result;
    result.focus_node = focus;
    result.result_path = shape.path;
    result.value = value;
    result.source_shape = shape.id;
    result.source_constraint_component = component;
    result.severity = shape.severity;
    result.message = shape.messages.empty() ? generated_message : shape.messages.front();
    out.push_back(std::move(result));
  }

  void apply(const ConstraintComponent& component, const Term& focus, const Shape& shape,
             const std::set<Term>& values, std::vector<ValidationResult>& out) {
    const std::string iri = component_iri(component);

    if (const auto* c = std::get_if<MinCount>(&component)) {
      if (static_cast<int>(values.size()) < c->count)
        emit(out, focus, shape, iri, std::nullopt,
             "expected at least " + std::to_string(c->count) + " values, found " +
                 std::to_string(values.size()));
    } else if (const auto* c = std::get_if<MaxCount>(&component)) {
      if (static_cast<int>(values.size()) > c->count)
        emit(out, focus, shape, iri, std::nullopt,
             "expected at most " + std::to_string(c->count) + " values, found " +
                 std::to_string(values.size()));
    } else if (const auto* c = std::get_if<ClassConstraint>(&component)) {
      const auto& insts = instances(c->class_iri);
      for (const auto& v : values)
        if (v.is_literal() || !insts.count(v))
          emit(out, focus, shape, iri, v,
               "value is not an instance of " + show(c->class_iri));
    } else if (const auto* c = std::get_if<DatatypeConstraint>(&component)) {
      for (const auto& v : values)
        if (!v.is_literal() || !(v.as_literal().datatype == c->datatype.as_iri()))
          emit(out, focus, shape, iri, v, "value does not have datatype " + show(c->datatype));
    } else if (const auto* c = std::get_if<NodeKindConstraint>(&component)) {
      const std::string& kind = c->kind.as_iri().value;
      for (const auto& v : values) {
        bool ok = (kind == sh("IRI") && v.is_iri()) ||
                  (kind == sh("BlankNode") && v.is_blank()) ||
                  (kind == sh("Literal") && v.is_literal()) ||
                  (kind == sh("BlankNodeOrIRI") && !v.is_literal()) ||
                  (kind == sh("BlankNodeOrLiteral") && !v.is_iri()) ||
                  (kind == sh("IRIOrLiteral") && !v.is_blank());
        if (!ok) emit(out, focus, shape, iri, v, "value is not of node kind " + show(c->kind));
      }
    } else if (const auto* c = std::get_if<HasValue>(&component)) {
      if (!values.count(c->value))
        emit(out, focus, shape, iri, std::nullopt, "required value " + show(c->value) + " is missing");
    } else if (const auto* c = std::get_if<InConstraint>(&component)) {
      for (const auto& v : values) {
        if (std::find(c->values.begin(), c->values.end(), v) == c->values.end())
          emit(out, focus, shape, iri, v, "value is not one of the allowed values");
      }
    } else if (const auto* c = std::get_if<PatternConstraint>(&component)) {
      for (const auto& v : values) {
        bool ok = false;
        if (!v.is_blank()) {
          const std::string& text = v.is_literal() ? v.as_literal().lexical : v.as_iri().value;
          ok = std::regex_search(text, c->compiled);
        }
        if (!ok)
          emit(out, focus, shape, iri, v, "value does not match pattern '" + c->pattern + "'");
      }
    } else if (const auto* c = std::get_if<NodeConstraint>(&component)) {
      for (const auto& v : values)
        if (!conforms(v, c->shape))
          emit(out, focus, shape, iri, v, "value does not conform to shape " + show(c->shape));
    } else if (const auto* c = std::get_if<NotConstraint>(&component)) {
      for (const auto& v : values)
        if (conforms(v, c->shape))
          emit(out, focus, shape, iri, v, "value conforms to the negated shape " + show(c->shape));
    } else if (const auto* c = std::get_if<AndConstraint>(&component)) {
      for (const auto& v : values) {
        bool all = true;
        for (const auto& member : c->shapes)
          if (!conforms(v, member)) {
            all = false;
            break;
          }
        if (!all) emit(out, focus, shape, iri, v, "value fails a member of sh:and");
      }
    } else if (const auto* c = std::get_if<OrConstraint>(&component)) {
      for (const auto& v : values) {
        bool any = false;
        for (const auto& member : c->shapes)
          if (conforms(v, member)) {
            any = true;
            break;
          }
        if (!any) emit(out, focus, shape, iri, v, "value conforms to no member of sh:or");
      }
    } else if (const auto* c = std::get_if<QualifiedValueShape>(&component)) {
      if (!c->min_count && !c->max_count) return;  // nothing to check
      int conforming = 0;
      for (const auto& v : values)
        if (conforms(v, c->shape)) ++conforming;
      if (c->min_count && conforming < *c->min_count)
        emit(out, focus, shape, sh("QualifiedMinCountConstraintComponent"), std::nullopt,
             "expected at least " + std::to_string(*c->min_count) +
                 " values conforming to " + show(c->shape) + ", found " +
                 std::to_string(conforming));
      if (c->max_count && conforming > *c->max_count)
        emit(out, focus, shape, sh("QualifiedMaxCountConstraintComponent"), std::nullopt,
             "expected at most " + std::to_string(*c->max_count) +
                 " values conforming to " + show(c->shape) + ", found " +
                 std::to_string(conforming));
    }
  }

  static void sort_and_dedupe(std::vector<ValidationResult>& results) {
    auto key = [](const ValidationResult& r) {
      return std::make_tuple(r.focus_node, r.source_shape, r.source_constraint_component,
                             r.value.has_value() ? *r.value : Term::iri(""),
                             r.result_path ? r.result_path->to_string({}) : std::string(),
                             r.message);
    };
    std::sort(results.begin(), results.end(),
              [&](const ValidationResult& a, const ValidationResult& b) { return key(a) < key(b); });
    results.erase(std::unique(results.begin(), results.end(),
                              [&](const ValidationResult& a, const ValidationResult& b) {
                                return key(a) == key(b);
                              }),
                  results.end());
  }
};

}  // namespace

ValidationReport validate(const RdfGraph& data, const ShapesGraph& shapes) {
  return Validator(data, shapes).run();
}

}  // namespace amlcheck::shacl
