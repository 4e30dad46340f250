#include "weave/rank2.hpp"

#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "weave/error.hpp"

namespace weave {

std::vector<std::string> check_rank2_data(const RankTwoData& d) {
  std::vector<std::string> problems;
  if (!d.g1 || !d.g2) return {"missing graph"};
  const auto& g1 = *d.g1;
  const auto& g2 = *d.g2;
  if (g1.vertices() != g2.vertices()) {
    problems.push_back("G1 and G2 must have identical vertex lists");
    return problems;
  }
  const auto m1 = vertex_matrix(g1), m2 = vertex_matrix(g2);
  if (!(multiply(m1, m2) == multiply(m2, m1))) problems.push_back("vertex matrices of G1 and G2 do not commute");

  auto pair_name = [](const DirectedGraph& x, std::size_t a, const DirectedGraph& y, std::size_t b) {
    return "(" + x.edge(a).name + "," + y.edge(b).name + ")";
  };

  std::set<std::pair<std::size_t, std::size_t>> domain, image;
  for (const auto& t : d.theta) {
    if (t.alpha >= g1.edge_count() || t.alpha2 >= g1.edge_count() || t.beta >= g2.edge_count() ||
        t.beta2 >= g2.edge_count()) {
      problems.push_back("theta entry refers to an unknown edge");
      continue;
    }
    const auto dn = pair_name(g1, t.alpha, g2, t.beta);
    const auto in = pair_name(g2, t.beta2, g1, t.alpha2);
    if (g1.edge(t.alpha).source != g2.edge(t.beta).range) problems.push_back("theta domain pair " + dn + " is not composable");
    if (g2.edge(t.beta2).source != g1.edge(t.alpha2).range) problems.push_back("theta image pair " + in + " is not composable");
    if (g1.edge(t.alpha).range != g2.edge(t.beta2).range)
      problems.push_back("theta" + dn + " = " + in + " violates r(alpha) = r(beta')");
    if (g2.edge(t.beta).source != g1.edge(t.alpha2).source)
      problems.push_back("theta" + dn + " = " + in + " violates s(beta) = s(alpha')");
    if (!domain.emplace(t.alpha, t.beta).second) problems.push_back("theta defined twice on " + dn);
    if (!image.emplace(t.beta2, t.alpha2).second) problems.push_back("theta is not injective: " + in + " hit twice");
  }
  for (std::size_t a = 0; a < g1.edge_count(); ++a)
    for (std::size_t b = 0; b < g2.edge_count(); ++b) {
      if (g1.edge(a).source == g2.edge(b).range && !domain.count({a, b}))
        problems.push_back("theta undefined on composable pair " + pair_name(g1, a, g2, b));
    }
  for (std::size_t b = 0; b < g2.edge_count(); ++b)
    for (std::size_t a = 0; a < g1.edge_count(); ++a) {
      if (g2.edge(b).source == g1.edge(a).range && !image.count({b, a}))
        problems.push_back("theta is not surjective: " + pair_name(g2, b, g1, a) + " missed");
    }
  return problems;
}

TextileSystem from_rank2(const RankTwoData& d) {
  const auto problems = check_rank2_data(d);
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "rank-two data " << d.name << " is invalid:";
    for (const auto& p : problems) msg << "\n  " << p;
    throw ValidationError(msg.str());
  }
  const auto& g1 = *d.g1;
  const auto& g2 = *d.g2;

  auto g = std::make_shared<DirectedGraph>(d.name + ".G");
  for (const auto& e : g1.edges()) g->add_vertex(e.name);
  auto h = std::make_shared<DirectedGraph>(opposite(g2));
  h->rename(d.name + ".H");

  TextileSystem t;
  t.name = d.name + ".textile";
  t.g = g;
  t.h = h;
  t.p = GraphMorphism{"p", g, h, {}, {}};
  t.q = GraphMorphism{"q", g, h, {}, {}};
  for (const auto& e : g1.edges()) {
    t.p.vertex_map.push_back(e.range);
    t.q.vertex_map.push_back(e.source);
  }
  // Edges in the order of composable pairs (alpha, beta), alpha-major.
  std::map<std::pair<std::size_t, std::size_t>, const ThetaEntry*> by_pair;
  for (const auto& te : d.theta) by_pair[{te.alpha, te.beta}] = &te;
  for (const auto& [key, te] : by_pair) {
    g->add_edge(g1.edge(te->alpha).name + "*" + g2.edge(te->beta).name, te->alpha, te->alpha2);
    t.p.edge_map.push_back(te->beta2);
    t.q.edge_map.push_back(te->beta);
  }
  return t;
}

}  // namespace weave
