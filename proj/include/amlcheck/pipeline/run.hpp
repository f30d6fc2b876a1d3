#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "amlcheck/llm/client.hpp"
#include "amlcheck/owlmap/mapping.hpp"

namespace amlcheck::pipeline {

/// Exit codes of a pipeline run.
/// 0 = conforming (or no validate stage), 1 = violations found,
/// 2 = pipeline error (parse / LLM / configuration failures).
enum ExitCode : int { Conforms = 0, Violations = 1, Error = 2 };

struct RunConfig {
  std::string aml_file;
  std::vector<std::string> ar_files;
  std::string constraints_file;
  std::string out_dir;
  owlmap::MappingConfig mapping;
  llm::LlmClientConfig llm;
  std::set<std::string> stages = {"map", "generate", "validate", "interpret"};
  std::string shapes_override;  // skip generation, use this shapes file
  /// Directory with ontology_summary.txt, iri_scheme.txt and examples/.
  std::string prompt_context_dir = "fixtures/prompt_context";
};

/// Blank-line-separated constraint blocks; '#' lines are comments.
std::vector<std::string> parse_constraints(const std::string& text);

/// Runs the enabled stages in order map -> generate -> validate -> interpret,
/// writing ontology.ttl, shapes.ttl, report.ttl, report.txt,
/// interpretation.md and exchanges.log under out_dir as they are produced.
/// Diagnostics go to `diag`; partial artifacts from completed stages are kept.
int run(const RunConfig& config, std::ostream& diag);

}  // namespace amlcheck::pipeline
