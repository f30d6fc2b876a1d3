#pragma once

#include <functional>
#include <string>
#include <vector>

#include "amlcheck/llm/client.hpp"
#include "amlcheck/rdf/graph.hpp"

namespace amlcheck::llm {

class NoTurtleFound : public LlmError {
  using LlmError::LlmError;
};

/// Strips code fences and surrounding prose: the candidate runs from the
/// first directive (or statement-looking) line through the last line that
/// ends a statement. Idempotent on its own successful output. The result is
/// a candidate only; the caller still has to parse it.
std::string extract_turtle(const std::string& response);

/// Union with blank-node renaming so labels never collide; prefix maps are
/// merged with later bindings winning.
rdf::RdfGraph merge_shape_graphs(const std::vector<rdf::RdfGraph>& parts);

struct GeneratedShapes {
  rdf::RdfGraph graph;                  // merged shapes of all constraints
  std::vector<LlmExchange> exchanges;   // one per constraint, list order
};

struct ShapePromptContext {
  std::string ontology_summary;
  std::vector<std::string> libraries;
  std::vector<ShapeExample> fewshot_examples;
  std::string iri_docs;
};

/// One LLM call per constraint with a bounded corrective-retry loop:
/// the response must extract, parse as Turtle, and compile as shapes.
/// Unusable output after max_retries corrections raises NoTurtleFound
/// (or the compiler's IllFormedShapeError).
GeneratedShapes generate_shapes(const ShapePromptContext& context,
                                const std::vector<std::string>& constraints,
                                const LlmClientConfig& cfg);

/// Raw response text for a prompt; lets tools swap in canned or recording
/// transports while keeping the retry loop identical.
using CompletionFn = std::function<std::string(const PromptBundle&)>;

GeneratedShapes generate_shapes_with(const ShapePromptContext& context,
                                     const std::vector<std::string>& constraints,
                                     int max_retries, const CompletionFn& complete_fn);

}  // namespace amlcheck::llm
