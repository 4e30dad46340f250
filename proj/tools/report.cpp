#include "report.hpp"

#include <cstdint>
#include <limits>

namespace weave::cli {

json Report::to_json() const {
  return json{{"command", command}, {"result", result}, {"notes", notes}, {"timing_ms", timing_ms}};
}

Report Report::from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::vector<std::string>>();
  r.result = j.at("result");
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

bool same_payload(const Report& a, const Report& b) {
  return a.command == b.command && a.result == b.result && a.notes == b.notes && a.timing_ms == b.timing_ms;
}

json matrix_json(const IntMatrix& m) { return m.to_rows(); }

IntMatrix matrix_from_json(const json& j) {
  return IntMatrix::from_rows(j.get<std::vector<std::vector<IntMatrix::value_type>>>());
}

json bigint_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  return BigInt(j.get<std::int64_t>());
}

json group_json(const FPAbelianGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(bigint_json(t));
  return json{{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

FPAbelianGroup group_from_json(const json& j) {
  FPAbelianGroup g;
  g.free_rank = j.at("free_rank").get<std::size_t>();
  for (const auto& t : j.at("torsion")) g.torsion.push_back(bigint_from_json(t));
  return g;
}

}  // namespace weave::cli
