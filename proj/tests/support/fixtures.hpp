#pragma once

#include <sstream>
#include <string>

#include "bnp/corpus.hpp"

#ifndef BNP_TEST_DATA_DIR
#error "BNP_TEST_DATA_DIR must be defined"
#endif

namespace bnp::testing {

inline std::string data_path(const std::string& name) {
  return std::string(BNP_TEST_DATA_DIR) + "/" + name;
}

inline Corpus bracketed(const std::string& text) {
  std::istringstream in(text);
  return read_bracketed(in, "<test>");
}

inline std::string to_bracketed(const Corpus& c) {
  std::ostringstream out;
  write_bracketed(c, out);
  return out.str();
}

inline std::string to_iob2(const Corpus& c) {
  std::ostringstream out;
  write_iob2(c, out);
  return out.str();
}

inline Corpus from_iob2(const std::string& text) {
  std::istringstream in(text);
  return read_iob2(in, "<test>");
}

inline Corpus example_sentence() { return read_corpus_file(data_path("example_sentence.txt"), Format::bracketed); }
inline Corpus boca() { return read_corpus_file(data_path("boca.txt"), Format::bracketed); }

}  // namespace bnp::testing
