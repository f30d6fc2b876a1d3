#pragma once

#include <stdexcept>
#include <string>

#include "amlcheck/rdf/graph.hpp"

namespace amlcheck::rdf {

class TurtleSyntaxError : public std::runtime_error {
public:
  TurtleSyntaxError(int line, const std::string& message)
      : std::runtime_error("Turtle syntax error at line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  int line() const { return line_; }
  const std::string& message() const { return message_; }

private:
  int line_;
  std::string message_;
};

/// Parses a Turtle document. Blank node labels are scoped to this call:
/// user labels come back as "u_<label>", anonymous nodes as "a_<n>".
RdfGraph parse_turtle(const std::string& text);

/// Serializes a graph as Turtle, one triple per line.
///
/// With sort=true the output is byte-deterministic: triples are ordered by
/// term lexical forms and blank nodes renamed b0, b1, ... by first occurrence
/// in that order. Blank nodes are ordered by a structural signature first, so
/// for graphs whose blank nodes are distinguishable by their incident triples
/// the canonical text depends only on the graph's isomorphism class. Blank
/// nodes that iterated signature refinement cannot tell apart (automorphic or
/// refinement-equivalent clusters) fall back to label order, which is stable
/// per graph but not canonical across relabelings.
std::string serialize_turtle(const RdfGraph& graph, bool sort);

}  // namespace amlcheck::rdf
