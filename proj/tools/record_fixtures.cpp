// Maintenance tool: (re-)records the replay fixtures for the LLM stages.
// Canned mode copies prepared response files into the fixtures directory
// under their prompt-hash names, walking the exact retry loop the pipeline
// walks; --live records real endpoint responses instead. Re-run this after
// any prompt-template change.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "amlcheck/caex/model.hpp"
#include "amlcheck/llm/postprocess.hpp"
#include "amlcheck/owlmap/mapping.hpp"
#include "amlcheck/pipeline/run.hpp"
#include "amlcheck/rdf/turtle.hpp"
#include "amlcheck/shacl/report_io.hpp"
#include "amlcheck/shacl/validate.hpp"

namespace fs = std::filesystem;
using namespace amlcheck;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Records chat-completion replay fixtures for the validation pipeline"};

  std::string aml_file, constraints_file, fixtures_dir, responses_dir;
  std::string prompt_context_dir = "fixtures/prompt_context";
  std::vector<std::string> ar_files;
  bool live = false, allow_failure = false, with_interpretation = false;
  llm::LlmClientConfig live_cfg;
  live_cfg.mode = llm::LlmClientConfig::Mode::Live;
  owlmap::MappingConfig mapping;
  int max_retries = 2;

  app.add_option("--aml", aml_file, "AML model file")->required();
  app.add_option("--ar", ar_files, "AR library file (repeatable)");
  app.add_option("--constraints", constraints_file, "Constraints text file")->required();
  app.add_option("--fixtures", fixtures_dir, "Fixture directory to write")->required();
  app.add_option("--responses", responses_dir,
                 "Directory with canned responses shapeN[.attemptM].txt, interpretation.txt");
  app.add_flag("--live", live, "Record real endpoint responses");
  app.add_flag("--allow-failure", allow_failure,
               "Keep going when a constraint never yields usable shapes");
  app.add_flag("--interpretation", with_interpretation,
               "Also run validation and record the interpretation fixture");
  app.add_option("--prompt-context", prompt_context_dir, "Prompt context directory");
  app.add_option("--model", live_cfg.model_name, "Model name (live)");
  app.add_option("--endpoint", live_cfg.endpoint_url, "Endpoint URL (live)");
  app.add_option("--api-key-env", live_cfg.api_key_env_var, "API key environment variable (live)");
  app.add_option("--max-retries", max_retries, "Retry budget to record fixtures for");
  CLI11_PARSE(app, argc, argv);

  if (!live && responses_dir.empty()) {
    std::cerr << "error: pass --responses <dir> or --live\n";
    return 2;
  }

  try {
    fs::create_directories(fixtures_dir);

    std::vector<std::string> library_texts;
    std::vector<caex::AmlDocument> ar_docs;
    for (const auto& ar : ar_files) {
      std::string text = read_file(ar);
      ar_docs.push_back(caex::parse_aml(text, fs::path(ar).filename().string()));
      library_texts.push_back(std::move(text));
    }
    auto document = caex::merge_documents(
        caex::parse_aml(read_file(aml_file), fs::path(aml_file).filename().string()),
        std::move(ar_docs));

    auto constraints = pipeline::parse_constraints(read_file(constraints_file));

    llm::ShapePromptContext context;
    context.ontology_summary = read_file(fs::path(prompt_context_dir) / "ontology_summary.txt");
    context.iri_docs = read_file(fs::path(prompt_context_dir) / "iri_scheme.txt");
    context.libraries = library_texts;
    for (int i = 1;; ++i) {
      fs::path c = fs::path(prompt_context_dir) / "examples" / ("gen" + std::to_string(i) + ".constraint.txt");
      fs::path s = fs::path(prompt_context_dir) / "examples" / ("gen" + std::to_string(i) + ".shapes.ttl");
      if (!fs::exists(c) || !fs::exists(s)) break;
      context.fewshot_examples.emplace_back(read_file(c), read_file(s));
    }

    int constraint_index = 0, attempt = 0;
    auto provider = [&](const llm::PromptBundle& bundle) {
      bool retry = bundle.user_text.find("### CORRECTION ###") != std::string::npos;
      if (!retry) {
        ++constraint_index;
        attempt = 1;
      } else {
        ++attempt;
      }
      std::string response;
      if (live) {
        response = llm::complete(bundle, live_cfg).raw_response;
      } else {
        fs::path specific = fs::path(responses_dir) / ("shape" + std::to_string(constraint_index) +
                                                       ".attempt" + std::to_string(attempt) + ".txt");
        fs::path base = fs::path(responses_dir) / ("shape" + std::to_string(constraint_index) + ".txt");
        response = read_file(fs::exists(specific) ? specific : base);
      }
      std::string hash = llm::prompt_hash(bundle);
      write_file(fs::path(fixtures_dir) / (hash + ".txt"), response);
      std::cout << "recorded shape" << constraint_index << " attempt " << attempt << " -> " << hash
                << ".txt\n";
      return response;
    };

    llm::GeneratedShapes generated;
    try {
      generated = llm::generate_shapes_with(context, constraints, max_retries, provider);
    } catch (const llm::NoTurtleFound& e) {
      std::cerr << "constraint never produced usable shapes: " << e.what() << "\n";
      if (!allow_failure) return 2;
      std::cout << "fixtures recorded for the failing retry chain\n";
      return 0;
    }

    if (with_interpretation) {
      auto [ontology, report_unused] = owlmap::map_document(document, mapping);
      std::string ontology_turtle = rdf::serialize_turtle(ontology, true);
      std::string shapes_turtle = rdf::serialize_turtle(generated.graph, true);
      auto compiled = shacl::parse_shapes(generated.graph);
      auto validation = shacl::validate(ontology, compiled);
      std::string report_turtle =
          rdf::serialize_turtle(shacl::report_to_graph(validation), true);

      llm::InterpretationExample example = {
          read_file(fs::path(prompt_context_dir) / "examples" / "interpret.report.ttl"),
          read_file(fs::path(prompt_context_dir) / "examples" / "interpret.explanation.md")};
      auto bundle = llm::build_interpretation_prompt(report_turtle, shapes_turtle, ontology_turtle,
                                                     library_texts, example);
      std::string response = live ? llm::complete(bundle, live_cfg).raw_response
                                  : read_file(fs::path(responses_dir) / "interpretation.txt");
      std::string hash = llm::prompt_hash(bundle);
      write_file(fs::path(fixtures_dir) / (hash + ".txt"), response);
      std::cout << "recorded interpretation -> " << hash << ".txt\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
