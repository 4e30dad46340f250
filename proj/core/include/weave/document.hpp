#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weave/error.hpp"
#include "weave/graph.hpp"
#include "weave/pattern.hpp"
#include "weave/rank2.hpp"
#include "weave/shift2d.hpp"
#include "weave/textile.hpp"

namespace weave {

enum class ObjectKind { graph, morphism, textile, shift, rank2, automaton };

const char* to_string(ObjectKind k) noexcept;

/// Everything declared in one input file. All top-level names share one
/// namespace; objects are kept in declaration order.
struct Document {
  std::vector<GraphPtr> graphs;
  std::vector<GraphMorphism> morphisms;
  std::vector<TextileSystem> textiles;
  std::vector<MatrixShift> shifts;
  std::vector<RankTwoData> rank2;
  std::vector<CellularAutomaton> automata;
  std::vector<std::pair<ObjectKind, std::string>> order;

  bool empty() const noexcept { return order.empty(); }
  std::optional<ObjectKind> kind_of(const std::string& name) const;

  GraphPtr graph(const std::string& name) const;
  const GraphMorphism* morphism(const std::string& name) const;
  const TextileSystem* textile(const std::string& name) const;
  const MatrixShift* shift(const std::string& name) const;
  const RankTwoData* rank2_data(const std::string& name) const;
  const CellularAutomaton* automaton(const std::string& name) const;

  void add(GraphPtr g);
  void add(GraphMorphism m);
  /// Adds the textile together with its graphs and morphisms; objects that
  /// already exist under the same name must be identical.
  void add(TextileSystem t);
  void add(MatrixShift x);
  void add(RankTwoData d);
  void add(CellularAutomaton ca);
};

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Line-based grammar, '#' starts a comment:
///   graph NAME / vertex V / edge E SRC DST
///   morphism NAME : G -> H / vmap V W / emap E F
///   textile NAME : G H P Q
///   shift NAME / alphabet S... / A + k rows / B + k rows
///   rank2 NAME : G1 G2 / theta A B -> B' A'
///   ca NAME / alphabet S... / C + k rows / window W / rule WORD SYMBOL
/// Names are resolved against earlier declarations only.
Document parse_document(std::string_view text);

/// Canonical text; parse_document(serialize(d)) reproduces d.
std::string serialize(const Document& doc);

/// Structural equality of two documents (names, order and every field).
bool equivalent(const Document& a, const Document& b);

/// Built-in example files, by name.
const std::vector<std::string>& example_names();
std::optional<std::string_view> example_text(std::string_view name);

}  // namespace weave
