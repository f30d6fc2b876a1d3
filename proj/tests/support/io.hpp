#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

inline std::string source_root() { return TEST_SOURCE_ROOT; }

inline std::string fixture_path(const std::string& relative) {
  return std::string(TEST_SOURCE_ROOT) + "/fixtures/" + relative;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string read_fixture(const std::string& relative) {
  return read_file(fixture_path(relative));
}

}  // namespace testsupport
