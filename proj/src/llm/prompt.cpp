#include "amlcheck/llm/prompt.hpp"

#include <sstream>

#include "amlcheck/rdf/turtle.hpp"

namespace amlcheck::llm {

const char* to_string(SectionLabel label) {
  switch (label) {
    case SectionLabel::OntologyContext: return "ONTOLOGY CONTEXT";
    case SectionLabel::RelevantLibraries: return "RELEVANT LIBRARIES";
    case SectionLabel::Examples: return "EXAMPLES";
    case SectionLabel::Constraints: return "CONSTRAINTS";
    case SectionLabel::Report: return "REPORT";
    case SectionLabel::Ontology: return "ONTOLOGY";
  }
  return "";
}

namespace {

std::string join_sections(const std::vector<PromptSection>& sections) {
  std::ostringstream out;
  for (const auto& section : sections) {
    out << "### " << to_string(section.label) << " ###\n" << section.body;
    if (section.body.empty() || section.body.back() != '\n') out << "\n";
    out << "\n";
  }
  return out.str();
}

std::string join_libraries(const std::vector<std::string>& libraries) {
  std::ostringstream out;
  for (std::size_t i = 0; i < libraries.size(); ++i) {
    if (i) out << "\n";
    out << libraries[i];
    if (libraries[i].empty() || libraries[i].back() != '\n') out << "\n";
  }
  return out.str();
}

}  // namespace

PromptBundle build_shape_prompt(const std::string& ontology_summary,
                                const std::vector<std::string>& libraries,
                                const std::vector<ShapeExample>& fewshot_examples,
                                const std::vector<std::string>& constraints,
                                const std::string& iri_docs) {
  if (constraints.empty()) throw EmptyConstraints();

  PromptBundle bundle;
  bundle.system_text =
      "You translate textual modeling constraints on AutomationML models into SHACL shapes "
      "that validate the RDF representation of those models.\n"
      "Rules:\n"
      "- Construct identifiers exactly as documented below; shapes must reference the IRIs "
      "that the mapped model actually contains.\n"
      "- Declare every prefix you use with @prefix.\n"
      "- Emit one node shape per constraint, with sh:message on each constraining property "
      "shape.\n"
      "- Return output without any explanations or markdown; output only valid Turtle.\n"
      "\nIdentifier scheme:\n" +
      iri_docs;

  std::ostringstream examples;
  for (std::size_t i = 0; i < fewshot_examples.size(); ++i) {
    examples << "Constraint:\n"
             << fewshot_examples[i].first << "\n\nShapes:\n"
             << fewshot_examples[i].second;
    if (i + 1 < fewshot_examples.size()) examples << "\n---\n";
  }

  std::ostringstream constraint_body;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    constraint_body << (i + 1) << ". " << constraints[i] << "\n";
  }

  bundle.sections = {
      {SectionLabel::OntologyContext, ontology_summary},
      {SectionLabel::RelevantLibraries, join_libraries(libraries)},
      {SectionLabel::Examples, examples.str()},
      {SectionLabel::Constraints, constraint_body.str()},
  };
  bundle.user_text = join_sections(bundle.sections);
  return bundle;
}

PromptBundle build_interpretation_prompt(const std::string& report_turtle,
                                         const std::string& shapes_turtle,
                                         const std::string& ontology_turtle,
                                         const std::vector<std::string>& libraries,
                                         const InterpretationExample& fewshot_example) {
  try {
    rdf::parse_turtle(report_turtle);
  } catch (const rdf::TurtleSyntaxError& e) {
    throw BadReport(std::string("validation report does not parse: ") + e.what());
  }

  PromptBundle bundle;
  bundle.system_text =
      "You explain SHACL validation reports for AutomationML models to engineers who do not "
      "know RDF or SHACL.\n"
      "For every sh:result in the report, explain in plain language which modeling rule was "
      "violated, by which element, and why; then suggest a concrete fix to the AutomationML "
      "model. If the report conforms, state that no violations were found.\n"
      "The CONSTRAINTS section holds the SHACL shapes the report was produced from; the "
      "ONTOLOGY section holds the RDF representation of the model under test.\n"
      "Answer in Markdown with one section per violation.";

  std::string example_body = "Report:\n" + fewshot_example.first +
                             "\nExplanation:\n" + fewshot_example.second;

  bundle.sections = {
      {SectionLabel::Examples, example_body},
      {SectionLabel::RelevantLibraries, join_libraries(libraries)},
      {SectionLabel::Ontology, ontology_turtle},
      {SectionLabel::Constraints, shapes_turtle},
      {SectionLabel::Report, report_turtle},
  };
  bundle.user_text = join_sections(bundle.sections);
  return bundle;
}

void append_instruction(PromptBundle& bundle, const std::string& instruction) {
  bundle.user_text += "\n### CORRECTION ###\n" + instruction + "\n";
}

}  // namespace amlcheck::llm
