// Access to the golden programs under tests/corpus.

#ifndef LDLOG_TESTS_SUPPORT_CORPUS_H_
#define LDLOG_TESTS_SUPPORT_CORPUS_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldlog::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(LDLOG_CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> files = {
      "reach.ldl", "reach_solved.ldl", "rects.ldl", "deriv_lib.ldl",
      "deriv.ldl", "depth.ldl", "empty.ldl"};
  return files;
}

}  // namespace ldlog::testing

#endif  // LDLOG_TESTS_SUPPORT_CORPUS_H_
