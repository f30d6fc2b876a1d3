#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "amlcheck/pipeline/run.hpp"

namespace {

using amlcheck::pipeline::RunConfig;

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  in >> j;

  if (j.contains("mapping")) {
    const auto& m = j["mapping"];
    if (m.contains("base_iri")) config.mapping.base_iri = m["base_iri"].get<std::string>();
    if (m.contains("aml_namespace"))
      config.mapping.aml_namespace = m["aml_namespace"].get<std::string>();
    if (m.contains("lib_namespace"))
      config.mapping.lib_namespace = m["lib_namespace"].get<std::string>();
  }
  if (j.contains("llm")) {
    const auto& l = j["llm"];
    if (l.contains("endpoint_url")) config.llm.endpoint_url = l["endpoint_url"].get<std::string>();
    if (l.contains("model_name")) config.llm.model_name = l["model_name"].get<std::string>();
    if (l.contains("api_key_env_var"))
      config.llm.api_key_env_var = l["api_key_env_var"].get<std::string>();
    if (l.contains("temperature")) config.llm.temperature = l["temperature"].get<double>();
    if (l.contains("max_retries")) config.llm.max_retries = l["max_retries"].get<int>();
    if (l.contains("timeout_seconds"))
      config.llm.timeout_seconds = l["timeout_seconds"].get<int>();
    if (l.contains("mode"))
      config.llm.mode = l["mode"].get<std::string>() == "live"
                            ? amlcheck::llm::LlmClientConfig::Mode::Live
                            : amlcheck::llm::LlmClientConfig::Mode::Replay;
    if (l.contains("fixtures_dir")) config.llm.fixtures_dir = l["fixtures_dir"].get<std::string>();
  }
  if (j.contains("prompt_context_dir"))
    config.prompt_context_dir = j["prompt_context_dir"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validates AutomationML models against textual constraints via RDF and SHACL"};
  app.require_subcommand(1);

  auto* cmd = app.add_subcommand(
      "validate", "Map an AML model to RDF, generate/compile SHACL shapes, validate, interpret");

  RunConfig config;
  std::string stages_csv = "map,generate,validate,interpret";
  std::string llm_mode;
  std::string config_file;

  cmd->add_option("--aml", config.aml_file, "AML/CAEX model file to check")->required();
  cmd->add_option("--ar", config.ar_files, "Application Recommendation library file (repeatable)");
  cmd->add_option("--constraints", config.constraints_file,
                  "Text file with blank-line-separated constraint blocks");
  cmd->add_option("--out", config.out_dir, "Output directory for pipeline artifacts")->required();
  cmd->add_option("--shapes", config.shapes_override,
                  "Use this SHACL shapes file and skip the generate stage");
  cmd->add_option("--stages", stages_csv, "Comma-separated subset of map,generate,validate,interpret");
  cmd->add_option("--llm-mode", llm_mode, "live or replay")
      ->check(CLI::IsMember({"live", "replay"}));
  cmd->add_option("--model", config.llm.model_name, "Chat completion model name");
  cmd->add_option("--endpoint", config.llm.endpoint_url, "Chat completion endpoint URL");
  cmd->add_option("--fixtures", config.llm.fixtures_dir, "Replay fixtures directory");
  cmd->add_option("--api-key-env", config.llm.api_key_env_var,
                  "Environment variable holding the API key (live mode)");
  cmd->add_option("--temperature", config.llm.temperature, "Sampling temperature");
  cmd->add_option("--max-retries", config.llm.max_retries,
                  "Corrective retries for unusable LLM output");
  cmd->add_option("--prompt-context", config.prompt_context_dir,
                  "Directory with ontology_summary.txt, iri_scheme.txt, examples/");
  cmd->add_option("--base-iri", config.mapping.base_iri, "Base IRI for minted instance IRIs");
  cmd->add_option("--aml-namespace", config.mapping.aml_namespace, "Vocabulary namespace");
  cmd->add_option("--lib-namespace", config.mapping.lib_namespace,
                  "Namespace for library-class IRIs");
  cmd->add_option("--config", config_file, "JSON config file (flags take precedence)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_file.empty()) {
      // config file first, then re-apply flags so they win
      RunConfig flags = config;
      apply_config_file(config, config_file);
      for (const auto* opt : cmd->get_options()) {
        if (opt->count() == 0) continue;
        const std::string& name = opt->get_name();
        if (name == "--model") config.llm.model_name = flags.llm.model_name;
        if (name == "--endpoint") config.llm.endpoint_url = flags.llm.endpoint_url;
        if (name == "--fixtures") config.llm.fixtures_dir = flags.llm.fixtures_dir;
        if (name == "--api-key-env") config.llm.api_key_env_var = flags.llm.api_key_env_var;
        if (name == "--temperature") config.llm.temperature = flags.llm.temperature;
        if (name == "--max-retries") config.llm.max_retries = flags.llm.max_retries;
        if (name == "--prompt-context") config.prompt_context_dir = flags.prompt_context_dir;
        if (name == "--base-iri") config.mapping.base_iri = flags.mapping.base_iri;
        if (name == "--aml-namespace") config.mapping.aml_namespace = flags.mapping.aml_namespace;
        if (name == "--lib-namespace") config.mapping.lib_namespace = flags.mapping.lib_namespace;
      }
    }
    if (!llm_mode.empty())
      config.llm.mode = llm_mode == "live" ? amlcheck::llm::LlmClientConfig::Mode::Live
                                           : amlcheck::llm::LlmClientConfig::Mode::Replay;

    config.stages.clear();
    std::stringstream ss(stages_csv);
    std::string stage;
    while (std::getline(ss, stage, ',')) {
      if (stage != "map" && stage != "generate" && stage != "validate" && stage != "interpret") {
        std::cerr << "error: unknown stage '" << stage << "'\n";
        return amlcheck::pipeline::Error;
      }
      config.stages.insert(stage);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return amlcheck::pipeline::Error;
  }

  return amlcheck::pipeline::run(config, std::cerr);
}
