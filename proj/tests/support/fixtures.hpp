#pragma once

#include <string>

#include "weave/document.hpp"

namespace weave::testing {

inline Document builtin(const std::string& name) { return parse_document(*example_text(name)); }

inline MatrixShift builtin_shift(const std::string& name) { return builtin(name).shifts.at(0); }

inline TextileSystem builtin_textile(const std::string& name) { return builtin(name).textiles.at(0); }

/// Every matrix shift declared in the built-in files.
inline std::vector<MatrixShift> all_builtin_shifts() {
  std::vector<MatrixShift> out;
  for (const auto& n : example_names())
    for (const auto& x : builtin(n).shifts) out.push_back(x);
  return out;
}

inline std::vector<TextileSystem> all_builtin_textiles() {
  std::vector<TextileSystem> out;
  for (const auto& n : example_names())
    for (const auto& t : builtin(n).textiles) out.push_back(t);
  return out;
}

inline IntMatrix golden_mean() { return IntMatrix{{1, 1}, {1, 0}}; }

}  // namespace weave::testing
