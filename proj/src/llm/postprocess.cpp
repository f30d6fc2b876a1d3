#include "amlcheck/llm/postprocess.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "amlcheck/rdf/turtle.hpp"
#include "amlcheck/shacl/shapes.hpp"

namespace amlcheck::llm {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  lines.push_back(current);
  return lines;
}

std::string trimmed(const std::string& s) {
  auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

bool is_directive_line(const std::string& line) {
  return line.rfind("@prefix", 0) == 0 || line.rfind("@base", 0) == 0 ||
         line.rfind("PREFIX", 0) == 0 || line.rfind("BASE", 0) == 0;
}

bool looks_like_statement_start(const std::string& line) {
  if (line.empty()) return false;
  char c = line[0];
  if (c == '<' || c == '[' || c == '(') return true;
  if (c == '_' && line.size() > 1 && line[1] == ':') return true;
  // prefixed name: a short token containing ':' before any whitespace
  auto ws = line.find_first_of(" \t");
  auto colon = line.find(':');
  return colon != std::string::npos && (ws == std::string::npos || colon < ws) &&
         std::isalpha(static_cast<unsigned char>(c));
}

}  // namespace

std::string extract_turtle(const std::string& response) {
  std::vector<std::string> lines = split_lines(response);

  // unwrap the first fenced code block, if any
  std::size_t begin = 0, end = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trimmed(lines[i]).rfind("```", 0) == 0) {
      begin = i + 1;
      end = begin;
      while (end < lines.size() && trimmed(lines[end]).rfind("```", 0) != 0) ++end;
      break;
    }
  }
  std::vector<std::string> candidate(lines.begin() + begin, lines.begin() + end);

  // first directive line wins; otherwise the first statement-looking line
  std::size_t start = candidate.size();
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (is_directive_line(trimmed(candidate[i]))) {
      start = i;
      break;
    }
  }
  if (start == candidate.size()) {
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      if (looks_like_statement_start(trimmed(candidate[i]))) {
        start = i;
        break;
      }
    }
  }
  if (start == candidate.size()) throw NoTurtleFound("response contains no Turtle content");

  std::size_t stop = candidate.size();
  while (stop > start) {
    std::string line = trimmed(candidate[stop - 1]);
    if (!line.empty() && line.back() == '.') break;
    --stop;
  }
  if (stop == start) throw NoTurtleFound("response contains no complete Turtle statement");

  std::ostringstream out;
  for (std::size_t i = start; i < stop; ++i) {
    out << candidate[i];
    if (i + 1 < stop) out << "\n";
  }
  return out.str();
}

rdf::RdfGraph merge_shape_graphs(const std::vector<rdf::RdfGraph>& parts) {
  rdf::RdfGraph merged;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [prefix, iri] : parts[i].prefixes()) merged.set_prefix(prefix, iri);
    std::string tag = "m" + std::to_string(i) + "_";
    auto rename = [&](const rdf::Term& t) {
      if (!t.is_blank()) return t;
      return rdf::Term::blank(tag + t.as_blank().label);
    };
    for (const auto& t : parts[i].triples())
      merged.insert(rename(t.subject), t.predicate, rename(t.object));
  }
  return merged;
}

GeneratedShapes generate_shapes_with(const ShapePromptContext& context,
                                     const std::vector<std::string>& constraints,
                                     int max_retries, const CompletionFn& complete_fn) {
  if (constraints.empty()) throw EmptyConstraints();

  GeneratedShapes out;
  std::vector<rdf::RdfGraph> parts;
  for (const auto& constraint : constraints) {
    PromptBundle bundle =
        build_shape_prompt(context.ontology_summary, context.libraries,
                           context.fewshot_examples, {constraint}, context.iri_docs);
    LlmExchange exchange;
    rdf::RdfGraph part;
    int attempt = 0;
    while (true) {
      ++attempt;
      exchange.prompt_hash = prompt_hash(bundle);
      exchange.raw_response = complete_fn(bundle);
      exchange.attempts = attempt;
      try {
        std::string extracted = extract_turtle(exchange.raw_response);
        part = rdf::parse_turtle(extracted);
        shacl::parse_shapes(part);  // compile gate; diagnostics are fine, errors are not
        exchange.extracted = std::move(extracted);
        break;
      } catch (const NoTurtleFound&) {
        if (attempt > max_retries) throw;
        append_instruction(bundle,
                           "The previous response was not usable. Output only valid Turtle, "
                           "with no explanations and no markdown fences.");
      } catch (const rdf::TurtleSyntaxError& e) {
        if (attempt > max_retries)
          throw NoTurtleFound(std::string("response does not parse as Turtle: ") + e.what());
        append_instruction(bundle, std::string("The previous response did not parse as Turtle (") +
                                       e.what() + "). Output only valid Turtle.");
      } catch (const shacl::IllFormedShapeError& e) {
        if (attempt > max_retries) throw;
        append_instruction(bundle, std::string("The previous shapes were ill-formed (") + e.what() +
                                       "). Every property shape needs sh:path; counts are "
                                       "non-negative integers. Output only valid Turtle.");
      }
    }
    out.exchanges.push_back(std::move(exchange));
    parts.push_back(std::move(part));
  }
  out.graph = merge_shape_graphs(parts);
  return out;
}

GeneratedShapes generate_shapes(const ShapePromptContext& context,
                                const std::vector<std::string>& constraints,
                                const LlmClientConfig& cfg) {
  cfg.validate();
  return generate_shapes_with(context, constraints, cfg.max_retries,
                              [&cfg](const PromptBundle& bundle) {
                                return complete(bundle, cfg).raw_response;
                              });
}

}  // namespace amlcheck::llm
