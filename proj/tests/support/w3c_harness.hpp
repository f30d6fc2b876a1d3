#pragma once

// Harness for the SHACL core conformance cases under tests/w3c/: each case is
// one Turtle file holding data + shapes (the data graph is the shapes graph,
// like the official suite's manifests) next to a <name>-report.ttl with the
// expected validation report. Produced and expected reports are compared by
// graph isomorphism after dropping sh:resultMessage, whose wording is
// implementation-defined.

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "amlcheck/rdf/isomorphism.hpp"
#include "amlcheck/rdf/turtle.hpp"
#include "amlcheck/shacl/report_io.hpp"
#include "amlcheck/shacl/validate.hpp"
#include "support/io.hpp"

namespace testsupport {

struct W3cOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline amlcheck::rdf::RdfGraph strip_messages(const amlcheck::rdf::RdfGraph& graph) {
  amlcheck::rdf::RdfGraph out;
  const amlcheck::rdf::Term message =
      amlcheck::rdf::Term::iri(std::string(amlcheck::rdf::ns::sh) + "resultMessage");
  for (const auto& t : graph.triples())
    if (!(t.predicate == message)) out.insert(t);
  return out;
}

inline std::vector<W3cOutcome> run_w3c_cases(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> cases;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.size() > 4 && name.ends_with(".ttl") && !name.ends_with("-report.ttl"))
      cases.push_back(name.substr(0, name.size() - 4));
  }
  std::sort(cases.begin(), cases.end());

  std::vector<W3cOutcome> outcomes;
  for (const auto& name : cases) {
    W3cOutcome outcome;
    outcome.name = name;
    try {
      auto graph = amlcheck::rdf::parse_turtle(read_file(dir + "/" + name + ".ttl"));
      auto expected = amlcheck::rdf::parse_turtle(read_file(dir + "/" + name + "-report.ttl"));
      auto shapes = amlcheck::shacl::parse_shapes(graph);
      auto report = amlcheck::shacl::validate(graph, shapes);
      auto produced = amlcheck::shacl::report_to_graph(report);
      outcome.passed = amlcheck::rdf::isomorphic(strip_messages(produced), strip_messages(expected));
      if (!outcome.passed)
        outcome.detail = "produced report differs:\n" +
                         amlcheck::rdf::serialize_turtle(strip_messages(produced), true);
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = e.what();
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace testsupport
