#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weave/matrix.hpp"

namespace weave {

struct Edge {
  std::string name;
  std::size_t source = 0;
  std::size_t range = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph. Vertex and edge order is declaration order and
/// every matrix derived from the graph is reported in that order. Vertex and
/// edge names live in separate namespaces.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  std::size_t add_vertex(const std::string& v);
  std::size_t add_edge(const std::string& e, const std::string& source, const std::string& range);
  std::size_t add_edge(const std::string& e, std::size_t source, std::size_t range);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(const std::string& v) const;
  std::optional<std::size_t> find_edge(const std::string& e) const;
  std::size_t vertex_index(const std::string& v) const;
  std::size_t edge_index(const std::string& e) const;

  std::vector<std::size_t> out_edges(std::size_t v) const;
  std::vector<std::size_t> in_edges(std::size_t v) const;

  /// Structural equality: names, order and incidences (graph name ignored).
  bool same_structure(const DirectedGraph& other) const;

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

using GraphPtr = std::shared_ptr<const DirectedGraph>;

/// M(i,j) = number of edges from vertex i to vertex j.
IntMatrix vertex_matrix(const DirectedGraph& g);

/// E(e,f) = 1 iff r(e) = s(f); the transition matrix of the edge shift.
IntMatrix edge_matrix(const DirectedGraph& g);

/// Same vertices and edges with source and range interchanged.
DirectedGraph opposite(const DirectedGraph& g);

/// A pair of total maps G^0 -> H^0 and G^1 -> H^1.
struct GraphMorphism {
  std::string name;
  GraphPtr domain;
  GraphPtr codomain;
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
};

struct MorphismReport {
  bool total = true;
  /// Edges e of the domain where vertex_map(s(e)) != s(edge_map(e)).
  std::vector<std::size_t> source_failures;
  /// Edges e of the domain where vertex_map(r(e)) != r(edge_map(e)).
  std::vector<std::size_t> range_failures;
  bool vertex_surjective = false;
  bool edge_surjective = false;

  bool commutes() const noexcept {
    return total && source_failures.empty() && range_failures.empty();
  }
  bool valid() const noexcept { return commutes(); }
  bool surjective() const noexcept { return vertex_surjective && edge_surjective; }
};

MorphismReport validate_morphism(const GraphMorphism& f);

}  // namespace weave
