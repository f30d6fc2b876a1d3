#include "amlcheck/pipeline/run.hpp"

namespace amlcheck::pipeline {

std::vector<std::string> parse_constraints(const std::string& text) {
  std::vector<std::string> constraints;
  std::string block;
  std::string line;

  auto flush = [&] {
    if (!block.empty()) constraints.push_back(block);
    block.clear();
  };
  auto feed = [&](const std::string& l) {
    std::string stripped = l;
    if (!stripped.empty() && stripped.back() == '\r') stripped.pop_back();
    bool blank = stripped.find_first_not_of(" \t") == std::string::npos;
    if (blank) {
      flush();
      return;
    }
    if (stripped[stripped.find_first_not_of(" \t")] == '#') return;  // comment
    if (!block.empty()) block += "\n";
    block += stripped;
  };

  for (char c : text) {
    if (c == '\n') {
      feed(line);
      line.clear();
    } else {
      line += c;
    }
  }
  feed(line);
  flush();
  return constraints;
}

}  // namespace amlcheck::pipeline
