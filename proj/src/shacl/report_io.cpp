#include "amlcheck/shacl/report_io.hpp"

#include <sstream>

namespace amlcheck::shacl {

using rdf::RdfGraph;
using rdf::Term;

namespace {

Term sh_term(const char* local) { return Term::iri(std::string(rdf::ns::sh) + local); }

class PathEmitter {
public:
  explicit PathEmitter(RdfGraph& graph) : graph_(graph) {}

  Term emit(const PropertyPath& path) {
    switch (path.kind) {
      case PropertyPath::Kind::Predicate:
        return path.predicate;
      case PropertyPath::Kind::Inverse: {
        Term node = fresh();
        graph_.insert(node, sh_term("inversePath"), emit(path.parts[0]));
        return node;
      }
      case PropertyPath::Kind::Sequence:
        return list(path.parts);
      case PropertyPath::Kind::Alternative: {
        Term node = fresh();
        graph_.insert(node, sh_term("alternativePath"), list(path.parts));
        return node;
      }
    }
    return path.predicate;
  }

private:
  RdfGraph& graph_;
  int counter_ = 0;

  Term fresh() { return Term::blank("p" + std::to_string(counter_++)); }

  Term list(const std::vector<PropertyPath>& parts) {
    Term head = fresh();
    Term node = head;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      graph_.insert(node, Term::iri(rdf::iris::rdf_first), emit(parts[i]));
      if (i + 1 < parts.size()) {
        Term next = fresh();
        graph_.insert(node, Term::iri(rdf::iris::rdf_rest), next);
        node = next;
      } else {
        graph_.insert(node, Term::iri(rdf::iris::rdf_rest), Term::iri(rdf::iris::rdf_nil));
      }
    }
    return head;
  }
};

std::string compact(const Term& term, const std::map<std::string, std::string>& prefixes) {
  if (term.is_blank()) return "_:" + term.as_blank().label;
  if (term.is_literal()) return "\"" + term.as_literal().lexical + "\"";
  const std::string& iri = term.as_iri().value;
  for (const auto& [prefix, ns_iri] : prefixes) {
    if (!ns_iri.empty() && iri.rfind(ns_iri, 0) == 0) {
      std::string local = iri.substr(ns_iri.size());
      if (local.find('/') == std::string::npos && local.find('#') == std::string::npos)
        return prefix + ":" + local;
    }
  }
  return "<" + iri + ">";
}

}  // namespace

RdfGraph report_to_graph(const ValidationReport& report) {
  RdfGraph graph;
  PathEmitter paths(graph);
  const Term type = Term::iri(rdf::iris::rdf_type);
  Term node = Term::blank("report");
  graph.insert(node, type, sh_term("ValidationReport"));
  graph.insert(node, sh_term("conforms"), Term::boolean(report.conforms));
  int i = 0;
  for (const auto& result : report.results) {
    Term rnode = Term::blank("r" + std::to_string(i++));
    graph.insert(node, sh_term("result"), rnode);
    graph.insert(rnode, type, sh_term("ValidationResult"));
    graph.insert(rnode, sh_term("focusNode"), result.focus_node);
    if (result.result_path)
      graph.insert(rnode, sh_term("resultPath"), paths.emit(*result.result_path));
    if (result.value) graph.insert(rnode, sh_term("value"), *result.value);
    graph.insert(rnode, sh_term("sourceShape"), result.source_shape);
    graph.insert(rnode, sh_term("sourceConstraintComponent"),
                 Term::iri(result.source_constraint_component));
    graph.insert(rnode, sh_term("resultSeverity"), Term::iri(severity_iri(result.severity)));
    graph.insert(rnode, sh_term("resultMessage"), Term::literal(result.message));
  }
  return graph;
}

std::string report_to_text(const ValidationReport& report,
                           const std::map<std::string, std::string>& prefixes) {
  std::ostringstream out;
  out << "conforms: " << (report.conforms ? "true" : "false") << "\n";
  out << "results: " << report.results.size() << "\n";
  if (report.results.empty()) return out.str();
  out << "\n";
  out << "focus node | path | component | message\n";
  out << "-----------+------+-----------+--------\n";
  for (const auto& result : report.results) {
    out << compact(result.focus_node, prefixes) << " | "
        << (result.result_path ? result.result_path->to_string(prefixes) : "-") << " | "
        << compact(Term::iri(result.source_constraint_component), prefixes) << " | "
        << result.message << "\n";
  }
  return out.str();
}

}  // namespace amlcheck::shacl
