#include "amlcheck/pipeline/run.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "amlcheck/caex/model.hpp"
#include "amlcheck/llm/postprocess.hpp"
#include "amlcheck/rdf/turtle.hpp"
#include "amlcheck/shacl/report_io.hpp"
#include "amlcheck/shacl/validate.hpp"

namespace amlcheck::pipeline {

namespace fs = std::filesystem;

namespace {

class StageError : public std::runtime_error {
public:
  StageError(const std::string& stage, const std::string& file, const std::string& cause)
      : std::runtime_error(stage + (file.empty() ? "" : " (" + file + ")") + ": " + cause) {}
};

std::string read_file(const std::string& stage, const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StageError(stage, path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& stage, const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StageError(stage, path.string(), "cannot write file");
  out << content;
}

llm::ShapePromptContext load_shape_context(const RunConfig& config,
                                           const std::vector<std::string>& library_texts) {
  fs::path dir = config.prompt_context_dir;
  llm::ShapePromptContext context;
  context.ontology_summary = read_file("generate", dir / "ontology_summary.txt");
  context.iri_docs = read_file("generate", dir / "iri_scheme.txt");
  context.libraries = library_texts;
  fs::path examples = dir / "examples";
  for (int i = 1;; ++i) {
    fs::path constraint = examples / ("gen" + std::to_string(i) + ".constraint.txt");
    fs::path shapes = examples / ("gen" + std::to_string(i) + ".shapes.ttl");
    if (!fs::exists(constraint) || !fs::exists(shapes)) break;
    context.fewshot_examples.emplace_back(read_file("generate", constraint),
                                          read_file("generate", shapes));
  }
  if (context.fewshot_examples.empty())
    throw StageError("generate", (examples / "gen1.constraint.txt").string(),
                     "no few-shot example pairs found");
  return context;
}

llm::InterpretationExample load_interpretation_example(const RunConfig& config) {
  fs::path examples = fs::path(config.prompt_context_dir) / "examples";
  return {read_file("interpret", examples / "interpret.report.ttl"),
          read_file("interpret", examples / "interpret.explanation.md")};
}

void append_exchange_log(std::string& log, const std::string& stage,
                         const llm::LlmExchange& exchange, std::size_t index) {
  log += stage + " #" + std::to_string(index) + " hash=" + exchange.prompt_hash +
         " attempts=" + std::to_string(exchange.attempts) +
         " extracted=" + (exchange.extracted ? "yes" : "raw") + "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& diag) {
  bool do_map = config.stages.count("map") > 0;
  bool do_generate = config.stages.count("generate") > 0 && config.shapes_override.empty();
  bool do_validate = config.stages.count("validate") > 0;
  bool do_interpret = config.stages.count("interpret") > 0;

  try {
    if (do_validate && !do_map)
      throw StageError("validate", "", "the validate stage requires the map stage");
    if (do_interpret && !do_validate)
      throw StageError("interpret", "", "the interpret stage requires the validate stage");
    if (do_validate && !do_generate && config.shapes_override.empty())
      throw StageError("validate", "",
                       "the validate stage needs shapes: enable generate or pass --shapes");

    fs::create_directories(config.out_dir);
    fs::path out_dir = config.out_dir;
    std::string exchange_log;

    // inputs
    std::vector<std::string> library_texts;
    std::vector<caex::AmlDocument> ar_docs;
    for (const auto& ar_file : config.ar_files) {
      std::string text = read_file("map", ar_file);
      try {
        ar_docs.push_back(caex::parse_aml(text, fs::path(ar_file).filename().string()));
      } catch (const caex::CaexError& e) {
        throw StageError("map", ar_file, e.what());
      }
      library_texts.push_back(std::move(text));
    }
    caex::AmlDocument document;
    {
      std::string text = read_file("map", config.aml_file);
      try {
        document = caex::merge_documents(
            caex::parse_aml(text, fs::path(config.aml_file).filename().string()),
            std::move(ar_docs));
      } catch (const caex::CaexError& e) {
        throw StageError("map", config.aml_file, e.what());
      }
    }

    // stage 1: map
    rdf::RdfGraph ontology;
    std::string ontology_turtle;
    if (do_map) {
      auto [graph, report] = owlmap::map_document(document, config.mapping);
      for (const auto& warning : report.warnings) diag << "map: warning: " << warning << "\n";
      ontology = std::move(graph);
      ontology_turtle = rdf::serialize_turtle(ontology, /*sort=*/true);
      write_file("map", out_dir / "ontology.ttl", ontology_turtle);
    }

    // stage 2: generate (or take the override shapes)
    rdf::RdfGraph shapes_graph;
    std::string shapes_turtle;
    bool have_shapes = false;
    if (do_generate) {
      std::string constraints_text = read_file("generate", config.constraints_file);
      auto constraints = parse_constraints(constraints_text);
      auto context = load_shape_context(config, library_texts);
      try {
        auto generated = llm::generate_shapes(context, constraints, config.llm);
        for (std::size_t i = 0; i < generated.exchanges.size(); ++i)
          append_exchange_log(exchange_log, "generate", generated.exchanges[i], i + 1);
        shapes_graph = std::move(generated.graph);
      } catch (const llm::LlmError& e) {
        throw StageError("generate", config.constraints_file, e.what());
      }
      shapes_turtle = rdf::serialize_turtle(shapes_graph, /*sort=*/true);
      write_file("generate", out_dir / "shapes.ttl", shapes_turtle);
      write_file("generate", out_dir / "exchanges.log", exchange_log);
      have_shapes = true;
    } else if (!config.shapes_override.empty()) {
      shapes_turtle = read_file("validate", config.shapes_override);
      try {
        shapes_graph = rdf::parse_turtle(shapes_turtle);
      } catch (const rdf::TurtleSyntaxError& e) {
        throw StageError("validate", config.shapes_override, e.what());
      }
      have_shapes = true;
    }

    // stage 3: validate
    bool conforms = true;
    std::string report_turtle;
    if (do_validate) {
      if (!have_shapes) throw StageError("validate", "", "no shapes available");
      shacl::ShapesGraph compiled;
      try {
        compiled = shacl::parse_shapes(shapes_graph);
      } catch (const shacl::IllFormedShapeError& e) {
        throw StageError("validate", config.shapes_override, e.what());
      }
      for (const auto& d : compiled.unsupported)
        diag << "validate: warning: unsupported constraint parameter <" << d.parameter_iri
             << ">\n";
      auto report = shacl::validate(ontology, compiled);
      conforms = report.conforms;
      auto report_graph = shacl::report_to_graph(report);
      report_turtle = rdf::serialize_turtle(report_graph, /*sort=*/true);
      write_file("validate", out_dir / "report.ttl", report_turtle);
      write_file("validate", out_dir / "report.txt",
                 shacl::report_to_text(report, ontology.prefixes()));
    }

    // stage 4: interpret
    if (do_interpret) {
      auto example = load_interpretation_example(config);
      try {
        auto bundle = llm::build_interpretation_prompt(report_turtle, shapes_turtle,
                                                       ontology_turtle, library_texts, example);
        auto exchange = llm::complete(bundle, config.llm);
        append_exchange_log(exchange_log, "interpret", exchange, 1);
        write_file("interpret", out_dir / "interpretation.md", exchange.raw_response);
        write_file("interpret", out_dir / "exchanges.log", exchange_log);
      } catch (const llm::LlmError& e) {
        throw StageError("interpret", "", e.what());
      } catch (const llm::BadReport& e) {
        throw StageError("interpret", "", e.what());
      }
    }

    return do_validate && !conforms ? Violations : Conforms;
  } catch (const StageError& e) {
    diag << "error: " << e.what() << "\n";
    return Error;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return Error;
  }
}

}  // namespace amlcheck::pipeline
