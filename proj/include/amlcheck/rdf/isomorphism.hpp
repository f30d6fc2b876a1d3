#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "amlcheck/rdf/graph.hpp"

namespace amlcheck::rdf {

/// Structural signatures for blank nodes: iterated color refinement over the
/// incident triples, blind to the actual labels. Equal signatures mean the
/// refinement could not tell the nodes apart.
std::map<std::string, std::uint64_t> blank_node_signatures(const RdfGraph& graph);

/// True iff the graphs are equal up to blank-node relabeling. Exact: after
/// signature pruning, remaining candidates are checked by backtracking search.
bool isomorphic(const RdfGraph& g1, const RdfGraph& g2);

}  // namespace amlcheck::rdf
