#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weave/bigint.hpp"
#include "weave/invariants.hpp"
#include "weave/matrix.hpp"

namespace weave::cli {

using nlohmann::json;

struct Report {
  std::vector<std::string> command;
  json result = json::object();
  std::vector<std::string> notes;
  double timing_ms = 0.0;
  /// Human-readable rendering; not part of the JSON form.
  std::vector<std::string> text;

  json to_json() const;
  static Report from_json(const json& j);
};

/// Equality of the machine-readable parts.
bool same_payload(const Report& a, const Report& b);

json matrix_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
/// Exact integer: a JSON number when it fits in 64 bits, a decimal string otherwise.
json bigint_json(const BigInt& v);
BigInt bigint_from_json(const json& j);
json group_json(const FPAbelianGroup& g);
FPAbelianGroup group_from_json(const json& j);

}  // namespace weave::cli
