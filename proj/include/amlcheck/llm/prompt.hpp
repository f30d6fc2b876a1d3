#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amlcheck::llm {

class EmptyConstraints : public std::runtime_error {
public:
  EmptyConstraints() : std::runtime_error("no constraints to generate shapes for") {}
};

class BadReport : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SectionLabel {
  OntologyContext,
  RelevantLibraries,
  Examples,
  Constraints,
  Report,
  Ontology,
};

const char* to_string(SectionLabel label);

struct PromptSection {
  SectionLabel label;
  std::string body;
};

/// Assembled prompt. user_text is the labeled concatenation of sections and
/// is byte-deterministic for identical inputs.
struct PromptBundle {
  std::string system_text;
  std::string user_text;
  std::vector<PromptSection> sections;
};

/// A worked (constraint text, shapes Turtle) pair.
using ShapeExample = std::pair<std::string, std::string>;
/// A worked (report Turtle, explanation) pair.
using InterpretationExample = std::pair<std::string, std::string>;

/// Prompt for turning textual constraints into SHACL shapes: ontology
/// context, relevant AR libraries, worked examples, then the constraints.
/// Standing instructions (identifier scheme from iri_docs, prefix
/// declarations, no explanations or markdown) go into system_text.
PromptBundle build_shape_prompt(const std::string& ontology_summary,
                                const std::vector<std::string>& libraries,
                                const std::vector<ShapeExample>& fewshot_examples,
                                const std::vector<std::string>& constraints,
                                const std::string& iri_docs);

/// One-shot prompt for explaining a validation report and suggesting fixes.
/// The SHACL shapes travel under the Constraints label (they are the
/// formalized constraints the report refers to).
PromptBundle build_interpretation_prompt(const std::string& report_turtle,
                                         const std::string& shapes_turtle,
                                         const std::string& ontology_turtle,
                                         const std::vector<std::string>& libraries,
                                         const InterpretationExample& fewshot_example);

/// Appends a corrective instruction for a retry; the bundle's hash changes.
void append_instruction(PromptBundle& bundle, const std::string& instruction);

}  // namespace amlcheck::llm
