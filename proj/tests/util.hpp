#ifndef OPENFOL_TESTS_UTIL_HPP
#define OPENFOL_TESTS_UTIL_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "openfol/proof.hpp"

namespace openfol::test {

inline std::string corpus_dir() { return OPENFOL_CORPUS_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ProofScript corpus_script(const std::string& file) {
  return parse_proof_script(read_file(corpus_dir() + "/" + file));
}

}  // namespace openfol::test

#endif  // OPENFOL_TESTS_UTIL_HPP
