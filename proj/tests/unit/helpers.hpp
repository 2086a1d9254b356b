#pragma once

#include <stdexcept>
#include <string>

#include "spinrsk/spinor.hpp"

namespace spinrsk::test {

inline Column col(const char* s) { return Column(parse_word(s)); }

// "(left right)(left right)..." blocks left to right
inline std::string str(const SpinorTableau& t) {
  std::string o;
  for (const SpinorBlock& b : t.blocks) o += "(" + to_string(b.left()) + to_string(b.right()) + ")";
  return o;
}

inline std::string rows(const SkewTableau& t) {
  std::string o;
  for (const auto& r : t.rows()) o += to_string(Word(r.begin(), r.end())) + "|";
  return o;
}

}  // namespace spinrsk::test
