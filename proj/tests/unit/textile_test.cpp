#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "weave/shift2d.hpp"
#include "weave/textile.hpp"

namespace weave {
namespace {

using testing::builtin_textile;

std::vector<std::vector<std::size_t>> all_paths(const DirectedGraph& h, std::size_t length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto grow = [&](auto&& self) -> void {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      if (!cur.empty() && h.edge(cur.back()).range != h.edge(e).source) continue;
      cur.push_back(e);
      self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  return out;
}

TextileSystem collision_textile() {
  auto g = std::make_shared<DirectedGraph>("G");
  g->add_vertex("u");
  g->add_edge("a", "u", "u");
  g->add_edge("b", "u", "u");
  auto h = std::make_shared<DirectedGraph>("H");
  h->add_vertex("w");
  h->add_edge("x", "w", "w");
  GraphMorphism p{"p", g, h, {0}, {0, 0}};
  GraphMorphism q{"q", g, h, {0}, {0, 0}};
  return TextileSystem{"collide", g, h, p, q};
}

TEST(ValidateTextile, BuiltinTextiles) {
  for (const auto* name : {"ex1", "ex2", "ex3", "nonlifting"})
    EXPECT_TRUE(validate_textile(builtin_textile(name)).valid()) << name;
}

TEST(ValidateTextile, ReportsCollidingPair) {
  const auto t = collision_textile();
  const auto r = validate_textile(t);
  EXPECT_FALSE(r.determinate());
  EXPECT_FALSE(r.valid());
  ASSERT_EQ(r.collisions.size(), 1u);
  EXPECT_EQ(r.collisions[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_FALSE(describe_failures(t, r).empty());
  EXPECT_THROW(require_valid(t), ValidationError);
}

TEST(ValidateTextile, NonSurjectiveMorphismRejected) {
  auto t = builtin_textile("ex2");
  t.p.edge_map = {0, 0, 0};
  const auto r = validate_textile(t);
  EXPECT_FALSE(r.p.surjective());
  EXPECT_FALSE(r.valid());
}

TEST(Dual, Ex1Shape) {
  const auto d = dual(builtin_textile("ex1"));
  EXPECT_EQ(d.g->vertex_count(), 1u);
  EXPECT_EQ(d.g->edge_count(), 2u);
  EXPECT_EQ(d.h->vertex_count(), 1u);
  EXPECT_EQ(d.h->edge_count(), 2u);
  EXPECT_TRUE(validate_textile(d).valid());
}

TEST(Dual, Ex2IsIsomorphicToEx3) {
  const auto d = dual(builtin_textile("ex2"));
  const auto ex3 = builtin_textile("ex3");
  const auto iso = are_isomorphic(d, ex3);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(testing::is_textile_isomorphism(d, ex3, *iso));
}

TEST(Dual, InvolutionOnBuiltinsAndGeneratedTextiles) {
  auto textiles = testing::all_builtin_textiles();
  for (const auto& x : testing::all_builtin_shifts()) textiles.push_back(textile_of(x, 2, 2));
  for (const auto& t : textiles) {
    const auto d = dual(t);
    ASSERT_TRUE(validate_textile(d).valid()) << t.name;
    const auto dd = dual(d);
    EXPECT_TRUE(dd.g->same_structure(*t.g)) << t.name;
    EXPECT_TRUE(dd.h->same_structure(*t.h)) << t.name;
    EXPECT_EQ(dd.p.edge_map, t.p.edge_map);
    EXPECT_EQ(dd.q.edge_map, t.q.edge_map);
    EXPECT_EQ(dd.p.vertex_map, t.p.vertex_map);
    EXPECT_EQ(dd.q.vertex_map, t.q.vertex_map);
  }
}

TEST(WangTiles, Ex1) {
  const auto tiles = wang_tiles(builtin_textile("ex1"));
  ASSERT_EQ(tiles.size(), 2u);
  EXPECT_EQ(tiles[0], (WangTile{"a", "x", "x", "u", "v"}));
  EXPECT_EQ(tiles[1], (WangTile{"b", "x", "x", "v", "u"}));
}

TEST(WangTiles, GoldenMeanCount) {
  const auto t = textile_of(testing::builtin_shift("golden-mean"), 2, 2);
  EXPECT_EQ(wang_tiles(t).size(), 7u);
}

TEST(Lifting, BuiltinClassification) {
  const auto r1 = lifting_report(builtin_textile("ex1"));
  EXPECT_TRUE(r1.p.covering());
  EXPECT_TRUE(r1.q.covering());
  for (const auto* name : {"ex2", "ex3"}) {
    const auto r = lifting_report(builtin_textile(name));
    EXPECT_TRUE(r.p.fibration()) << name;
    EXPECT_TRUE(r.q.fibration()) << name;
    EXPECT_FALSE(r.p.covering()) << name;
    EXPECT_FALSE(r.q.covering()) << name;
  }
}

TEST(Lifting, Ex2HasTwoLiftsOfE) {
  const auto r = lifting_report(builtin_textile("ex2"));
  const LiftWitness w{LiftMode::source, "u", "e", 2};
  EXPECT_NE(std::find(r.p.witnesses.begin(), r.p.witnesses.end(), w), r.p.witnesses.end());
}

TEST(Lifting, NegativeExampleWitnesses) {
  const auto r = lifting_report(builtin_textile("nonlifting"));
  EXPECT_FALSE(r.p.s_exists);
  EXPECT_FALSE(r.q.s_exists);
  const LiftWitness pw{LiftMode::source, "u", "f", 0};
  const LiftWitness qw{LiftMode::source, "v", "e", 0};
  EXPECT_NE(std::find(r.p.witnesses.begin(), r.p.witnesses.end(), pw), r.p.witnesses.end());
  EXPECT_NE(std::find(r.q.witnesses.begin(), r.q.witnesses.end(), qw), r.q.witnesses.end());
}

TEST(Lifting, FlagsMatchDefinitionByCounting) {
  auto textiles = testing::all_builtin_textiles();
  for (const auto& x : testing::all_builtin_shifts()) textiles.push_back(textile_of(x, 2, 2));
  for (const auto& t : textiles) {
    const auto rep = lifting_report(t);
    for (const auto* phi : {&t.p, &t.q}) {
      const auto& c = phi == &t.p ? rep.p : rep.q;
      for (auto mode : {LiftMode::source, LiftMode::range}) {
        bool exists = true, unique = true;
        for (std::size_t v = 0; v < t.g->vertex_count(); ++v)
          for (std::size_t b = 0; b < t.h->edge_count(); ++b) {
            const auto& hb = t.h->edge(b);
            if ((mode == LiftMode::source ? hb.source : hb.range) != phi->vertex_map[v]) continue;
            const auto n = testing::lifts_at(*phi, v, b, mode);
            exists = exists && n >= 1;
            unique = unique && n == 1;
          }
        EXPECT_EQ(mode == LiftMode::source ? c.s_exists : c.r_exists, exists) << t.name;
        EXPECT_EQ(mode == LiftMode::source ? c.s_unique : c.r_unique, unique) << t.name;
      }
    }
  }
}

TEST(CountLifts, Ex2FiberSizes) {
  const auto t = builtin_textile("ex2");
  const auto e = t.h->edge_index("e"), f = t.h->edge_index("f");
  EXPECT_EQ(count_lifts(t.p, {e}, LiftMode::source).total, 2);
  EXPECT_EQ(count_lifts(t.p, {e, e, e}, LiftMode::source).total, 8);
  EXPECT_EQ(count_lifts(t.p, {e, f, e}, LiftMode::source).total, 4);
}

TEST(CountLifts, EmptyPathNeedsAnchor) {
  const auto t = builtin_textile("ex1");
  EXPECT_THROW(count_lifts(t.p, {}, LiftMode::source), InvalidArgument);
  const auto c = count_lifts(t.p, {}, LiftMode::source, 0);
  EXPECT_EQ(c.total, 2);
  for (const auto& [v, n] : c.per_vertex) EXPECT_EQ(n, 1);
}

TEST(CountLifts, RejectsNonComposablePath) {
  const auto t = textile_of(testing::builtin_shift("golden-mean"), 2, 2);
  // H = G(1,2): the edge 1/0 ends at 1 and 1/0 starts at 0.
  const auto b = t.h->edge_index("1/0");
  EXPECT_THROW(count_lifts(t.p, {b, b}, LiftMode::source), InvalidArgument);
}

TEST(CountLifts, CoveringGivesUniqueLifts) {
  for (const auto* name : {"ex1"}) {
    const auto t = builtin_textile(name);
    for (std::size_t len = 1; len <= 4; ++len)
      for (const auto& path : all_paths(*t.h, len))
        for (auto mode : {LiftMode::source, LiftMode::range})
          for (const auto& [v, n] : count_lifts(t.p, path, mode).per_vertex) EXPECT_EQ(n, 1);
  }
}

TEST(CountLifts, AgreesWithPathEnumeration) {
  auto textiles = testing::all_builtin_textiles();
  for (const auto& x : testing::all_builtin_shifts()) textiles.push_back(textile_of(x, 2, 2));
  for (const auto& t : textiles)
    for (const auto* phi : {&t.p, &t.q})
      for (std::size_t len = 1; len <= 5; ++len) {
        const auto paths = all_paths(*t.h, len);
        for (std::size_t i = 0; i < paths.size(); i += 1 + paths.size() / 40)
          for (auto mode : {LiftMode::source, LiftMode::range}) {
            const auto c = count_lifts(*phi, paths[i], mode);
            BigInt total = 0;
            for (const auto& [v, n] : c.per_vertex) {
              EXPECT_EQ(n, testing::brute_lift_count(*phi, paths[i], mode, v)) << t.name;
              total += n;
            }
            EXPECT_EQ(total, c.total);
          }
      }
}

TEST(Isomorphism, SelfAndSizeMismatch) {
  const auto ex2 = builtin_textile("ex2");
  const auto self = are_isomorphic(ex2, ex2);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->g_edge, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(self->h_edge, (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(are_isomorphic(builtin_textile("ex1"), ex2).has_value());
}

TEST(Isomorphism, DistinguishesSwappedMorphisms) {
  auto t = builtin_textile("ex2");
  auto swapped = t;
  std::swap(swapped.p, swapped.q);
  // Swapping p and q of ex2 is undone by relabelling e <-> f and a <-> c.
  const auto iso = are_isomorphic(t, swapped);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(testing::is_textile_isomorphism(t, swapped, *iso));
  const auto nl = builtin_textile("nonlifting");
  auto nl_swapped = nl;
  std::swap(nl_swapped.p, nl_swapped.q);
  if (const auto other = are_isomorphic(nl, nl_swapped)) EXPECT_TRUE(testing::is_textile_isomorphism(nl, nl_swapped, *other));
}

TEST(Isomorphism, SizeBound) {
  const auto t = textile_of(testing::builtin_shift("full-shift-2"), 2, 2);
  EXPECT_THROW(are_isomorphic(t, t, 10), BudgetExceeded);
}

}  // namespace
}  // namespace weave
