#pragma once

#include <random>
#include <string>

#include "amlcheck/rdf/graph.hpp"

namespace testsupport {

/// Random graphs over a small vocabulary: a handful of IRIs, blank nodes,
/// classes, plus literals of assorted datatypes and language tags.
inline amlcheck::rdf::RdfGraph random_graph(std::mt19937& rng, int max_triples = 30) {
  using amlcheck::rdf::Term;
  amlcheck::rdf::RdfGraph g;
  g.set_prefix("ex", "http://example.org/t/");

  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };

  auto node = [&]() -> Term {
    int roll = pick(10);
    if (roll < 7) return Term::iri("http://example.org/t/n" + std::to_string(pick(8)));
    return Term::blank("x" + std::to_string(pick(4)));
  };
  auto predicate = [&]() -> Term {
    return Term::iri("http://example.org/t/p" + std::to_string(pick(4)));
  };
  auto klass = [&]() -> Term {
    return Term::iri("http://example.org/t/C" + std::to_string(pick(5)));
  };
  auto literal = [&]() -> Term {
    switch (pick(5)) {
      case 0: return Term::literal("v" + std::to_string(pick(6)));
      case 1: return Term::integer(pick(100));
      case 2: return Term::boolean(pick(2) == 0);
      case 3: return Term::lang_literal("hallo " + std::to_string(pick(3)), "de");
      default:
        return Term::typed_literal("2024-0" + std::to_string(1 + pick(9)) + "-01",
                                   "http://www.w3.org/2001/XMLSchema#date");
    }
  };

  int triples = std::uniform_int_distribution<int>(0, max_triples)(rng);
  for (int i = 0; i < triples; ++i) {
    switch (pick(4)) {
      case 0:
        g.insert(node(), Term::iri(amlcheck::rdf::iris::rdf_type), klass());
        break;
      case 1:
        g.insert(klass(), Term::iri(amlcheck::rdf::iris::rdfs_sub_class_of), klass());
        break;
      case 2:
        g.insert(node(), predicate(), literal());
        break;
      default:
        g.insert(node(), predicate(), node());
    }
  }
  return g;
}

}  // namespace testsupport
