#include "weave/graph.hpp"

#include <algorithm>

#include "weave/error.hpp"

namespace weave {

std::size_t DirectedGraph::add_vertex(const std::string& v) {
  if (vertex_lookup_.count(v))
    throw InvalidArgument("graph " + name_ + ": duplicate vertex '" + v + "'");
  vertex_lookup_.emplace(v, vertices_.size());
  vertices_.push_back(v);
  return vertices_.size() - 1;
}

std::size_t DirectedGraph::add_edge(const std::string& e, const std::string& source,
                                    const std::string& range) {
  const auto s = find_vertex(source);
  if (!s) throw InvalidArgument("graph " + name_ + ": edge '" + e + "' uses undeclared vertex '" + source + "'");
  const auto r = find_vertex(range);
  if (!r) throw InvalidArgument("graph " + name_ + ": edge '" + e + "' uses undeclared vertex '" + range + "'");
  return add_edge(e, *s, *r);
}

std::size_t DirectedGraph::add_edge(const std::string& e, std::size_t source, std::size_t range) {
  if (source >= vertices_.size() || range >= vertices_.size())
    throw InvalidArgument("graph " + name_ + ": edge '" + e + "' has an out-of-range endpoint");
  if (edge_lookup_.count(e))
    throw InvalidArgument("graph " + name_ + ": duplicate edge '" + e + "'");
  edge_lookup_.emplace(e, edges_.size());
  edges_.push_back(Edge{e, source, range});
  return edges_.size() - 1;
}

std::optional<std::size_t> DirectedGraph::find_vertex(const std::string& v) const {
  auto it = vertex_lookup_.find(v);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DirectedGraph::find_edge(const std::string& e) const {
  auto it = edge_lookup_.find(e);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t DirectedGraph::vertex_index(const std::string& v) const {
  if (auto i = find_vertex(v)) return *i;
  throw InvalidArgument("graph " + name_ + ": unknown vertex '" + v + "'");
}

std::size_t DirectedGraph::edge_index(const std::string& e) const {
  if (auto i = find_edge(e)) return *i;
  throw InvalidArgument("graph " + name_ + ": unknown edge '" + e + "'");
}

std::vector<std::size_t> DirectedGraph::out_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].source == v) out.push_back(e);
  return out;
}

std::vector<std::size_t> DirectedGraph::in_edges(std::size_t v) const {
  std::vector<std::size_t> in;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].range == v) in.push_back(e);
  return in;
}

bool DirectedGraph::same_structure(const DirectedGraph& other) const {
  return vertices_ == other.vertices_ && edges_ == other.edges_;
}

IntMatrix vertex_matrix(const DirectedGraph& g) {
  IntMatrix m(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) m.set(e.source, e.range, m(e.source, e.range) + 1);
  return m;
}

IntMatrix edge_matrix(const DirectedGraph& g) {
  IntMatrix m(g.edge_count(), g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (std::size_t f = 0; f < g.edge_count(); ++f)
      if (g.edge(e).range == g.edge(f).source) m.set(e, f, 1);
  return m;
}

DirectedGraph opposite(const DirectedGraph& g) {
  DirectedGraph op(g.name());
  for (const auto& v : g.vertices()) op.add_vertex(v);
  for (const auto& e : g.edges()) op.add_edge(e.name, e.range, e.source);
  return op;
}

MorphismReport validate_morphism(const GraphMorphism& f) {
  MorphismReport rep;
  if (!f.domain || !f.codomain) throw InvalidArgument("morphism " + f.name + ": missing domain or codomain");
  const auto& g = *f.domain;
  const auto& h = *f.codomain;
  if (f.vertex_map.size() != g.vertex_count() || f.edge_map.size() != g.edge_count()) {
    rep.total = false;
    return rep;
  }
  for (auto w : f.vertex_map)
    if (w >= h.vertex_count()) rep.total = false;
  for (auto b : f.edge_map)
    if (b >= h.edge_count()) rep.total = false;
  if (!rep.total) return rep;

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& img = h.edge(f.edge_map[e]);
    if (f.vertex_map[g.edge(e).source] != img.source) rep.source_failures.push_back(e);
    if (f.vertex_map[g.edge(e).range] != img.range) rep.range_failures.push_back(e);
  }
  std::vector<bool> hit_v(h.vertex_count(), false), hit_e(h.edge_count(), false);
  for (auto w : f.vertex_map) hit_v[w] = true;
  for (auto b : f.edge_map) hit_e[b] = true;
  rep.vertex_surjective = std::all_of(hit_v.begin(), hit_v.end(), [](bool x) { return x; });
  rep.edge_surjective = std::all_of(hit_e.begin(), hit_e.end(), [](bool x) { return x; });
  return rep;
}

}  // namespace weave
