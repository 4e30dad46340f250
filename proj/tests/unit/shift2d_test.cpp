#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "weave/shift2d.hpp"

namespace weave {
namespace {

using testing::builtin_shift;

MatrixShift make_shift(IntMatrix a, IntMatrix b) {
  MatrixShift x{"x", {}, std::move(a), std::move(b)};
  for (std::size_t i = 0; i < x.a.rows(); ++i) x.alphabet.push_back(std::to_string(i));
  return x;
}

std::vector<testing::Reading> readings(const std::vector<Block>& blocks) {
  std::vector<testing::Reading> out;
  for (const auto& b : blocks) out.push_back(b.reading_order());
  return out;
}

TEST(Coherence, Ex2PairIsCoherentButNotCommuting) {
  const auto x = builtin_shift("ex2");
  EXPECT_TRUE(is_coherent(x.a, x.b).coherent());
  EXPECT_NE(multiply(x.a, x.b), multiply(x.b, x.a));
}

TEST(Coherence, WitnessForNonCoherentPair) {
  const auto r = is_coherent(IntMatrix{{1, 1}, {1, 0}}, IntMatrix{{1, 0}, {1, 1}});
  EXPECT_EQ(r.status, CoherenceStatus::not_coherent);
  EXPECT_EQ(r.which, "AB/BA");
  EXPECT_EQ(r.i, 1u);
  EXPECT_EQ(r.j, 1u);
}

TEST(Coherence, GoldenMeanWithItself) {
  EXPECT_TRUE(is_coherent(testing::golden_mean(), testing::golden_mean()).coherent());
}

TEST(Coherence, ZeroLineIsDistinct) {
  const auto r = is_coherent(IntMatrix{{0, 1}, {0, 0}}, IntMatrix::all_ones(2));
  EXPECT_EQ(r.status, CoherenceStatus::zero_line);
}

TEST(Coherence, MatchesProductDefinitionOnRandomPairs) {
  testing::Gen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto k = 1 + gen.below(4);
    const auto a = gen.binary_matrix(k, k, 0.7), b = gen.binary_matrix(k, k, 0.7);
    if (has_zero_row(a) || has_zero_column(a) || has_zero_row(b) || has_zero_column(b)) continue;
    const auto ab = multiply(a, b), ba = multiply(b, a);
    const auto abt = multiply(a, transpose(b)), bta = multiply(transpose(b), a);
    bool expect = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        expect = expect && ((ab(i, j) > 0) == (ba(i, j) > 0)) && ((abt(i, j) > 0) == (bta(i, j) > 0));
    EXPECT_EQ(is_coherent(a, b).coherent(), expect);
  }
}

TEST(EnumerateBlocks, GoldenMeanCounts) {
  const auto x = builtin_shift("golden-mean");
  EXPECT_EQ(enumerate_blocks(x, 1, 2).size(), 3u);
  const auto b22 = enumerate_blocks(x, 2, 2);
  ASSERT_EQ(b22.size(), 7u);
  std::vector<std::string> names;
  for (const auto& b : b22) names.push_back(block_name(x, b));
  EXPECT_EQ(names, (std::vector<std::string>{"00/00", "00/01", "00/10", "01/00", "01/10", "10/00", "10/01"}));
}

TEST(EnumerateBlocks, FullShiftCounts) {
  const auto x = builtin_shift("full-shift-2");
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(enumerate_blocks(x, m, n).size(), 1u << (m * n));
}

TEST(EnumerateBlocks, MatchesBruteForceIncludingOrder) {
  auto shifts = testing::all_builtin_shifts();
  testing::Gen gen(17);
  for (int i = 0; i < 20; ++i) shifts.push_back(gen.coherent_shift(3));
  for (const auto& x : shifts)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        if (std::pow(static_cast<double>(x.size()), static_cast<double>(m * n)) > 300000) continue;
        const auto blocks = enumerate_blocks(x, m, n);
        EXPECT_EQ(readings(blocks), testing::brute_blocks(x, m, n)) << x.name << " " << m << "x" << n;
        for (const auto& b : blocks) EXPECT_TRUE(locally_admissible(x, b));
      }
}

TEST(EnumerateBlocks, BudgetIsHard) {
  const auto x = builtin_shift("full-shift-2");
  EXPECT_THROW(enumerate_blocks(x, 4, 4, Budget{1000}), BudgetExceeded);
}

TEST(TextileOf, FullShiftGraphs) {
  const auto t = textile_of(builtin_shift("full-shift-2"), 2, 2);
  EXPECT_EQ(vertex_matrix(*t.g), IntMatrix::all_ones(4));
  EXPECT_EQ(vertex_matrix(*t.h), IntMatrix::all_ones(2));
}

TEST(TextileOf, GoldenMeanSizes) {
  const auto t = textile_of(builtin_shift("golden-mean"), 2, 2);
  EXPECT_EQ(t.g->vertex_count(), 3u);
  EXPECT_EQ(t.g->edge_count(), 7u);
  EXPECT_EQ(t.h->vertex_count(), 2u);
  EXPECT_EQ(t.h->edge_count(), 3u);
  EXPECT_EQ(t.g->vertices(), (std::vector<std::string>{"00", "01", "10"}));
}

TEST(TextileOf, AlwaysValidWithOneTilePerBlock) {
  auto shifts = testing::all_builtin_shifts();
  testing::Gen gen(23);
  for (int i = 0; i < 15; ++i) shifts.push_back(gen.coherent_shift(3));
  for (const auto& x : shifts)
    for (std::size_t m = 2; m <= 3; ++m)
      for (std::size_t n = 2; n <= 3; ++n) {
        if (enumerate_blocks(x, m, n).empty()) continue;
        const auto t = textile_of(x, m, n);
        EXPECT_TRUE(validate_textile(t).valid()) << x.name;
        EXPECT_EQ(wang_tiles(t).size(), enumerate_blocks(x, m, n).size());
      }
}

TEST(TextileOf, EmptyBlockSetRejected) {
  const auto x = make_shift(IntMatrix{{0, 1}, {0, 0}}, IntMatrix{{0, 1}, {0, 0}});
  EXPECT_THROW(textile_of(x, 2, 2), InvalidArgument);
}

TEST(DualTextileOf, EqualsDualOfTextileOf) {
  for (const auto& x : testing::all_builtin_shifts())
    for (std::size_t m = 2; m <= 3; ++m)
      for (std::size_t n = 2; n <= 3; ++n) {
        if (enumerate_blocks(x, m, n).empty()) continue;
        const auto direct = dual_textile_of(x, m, n);
        const auto via = dual(textile_of(x, m, n));
        EXPECT_TRUE(direct.g->same_structure(*via.g)) << x.name;
        EXPECT_TRUE(direct.h->same_structure(*via.h)) << x.name;
        EXPECT_EQ(direct.p.edge_map, via.p.edge_map);
        EXPECT_EQ(direct.q.edge_map, via.q.edge_map);
        EXPECT_EQ(direct.g->vertex_count(), enumerate_blocks(x, m - 1, n).size());
      }
}

TEST(ShiftOfTextile, Ex2AndEx3ReproduceStoredMatrices) {
  const auto doc2 = testing::builtin("ex2");
  const auto x2 = shift_of_textile(doc2.textiles[0]);
  EXPECT_EQ(x2.a, doc2.shifts[0].a);
  EXPECT_EQ(x2.b, doc2.shifts[0].b);
  const auto doc3 = testing::builtin("ex3");
  const auto x3 = shift_of_textile(doc3.textiles[0]);
  EXPECT_EQ(x3.a, x2.b);
  EXPECT_EQ(x3.b, x2.a);
  const auto doc1 = testing::builtin("ex1");
  const auto x1 = shift_of_textile(doc1.textiles[0]);
  EXPECT_EQ(x1.a, doc1.shifts[0].a);
  EXPECT_EQ(x1.b, doc1.shifts[0].b);
}

TEST(CornerReport, FullShiftHasTwoCompletions) {
  const auto r = corner_fibration_report(builtin_shift("full-shift-2"));
  for (const auto* c : {&r.p, &r.q}) {
    EXPECT_TRUE(c->fibration());
    EXPECT_FALSE(c->s_unique);
    EXPECT_FALSE(c->r_unique);
    for (const auto& w : c->witnesses) EXPECT_EQ(w.count, 2u);
  }
}

TEST(CornerReport, OneSymbolShiftIsCovering) {
  const auto r = corner_fibration_report(make_shift(IntMatrix{{1}}, IntMatrix{{1}}));
  EXPECT_TRUE(r.p.covering());
  EXPECT_TRUE(r.q.covering());
}

TEST(CornerReport, AgreesWithTextileRoute) {
  auto shifts = testing::all_builtin_shifts();
  testing::Gen gen(29);
  for (int i = 0; i < 50; ++i) shifts.push_back(gen.coherent_shift(4));
  for (const auto& x : shifts) {
    if (enumerate_blocks(x, 2, 2).empty()) continue;
    EXPECT_EQ(corner_fibration_report(x), lifting_report(textile_of(x, 2, 2))) << x.a << x.b;
  }
}

TEST(Rank2Check, BuiltinCases) {
  const auto ex1 = rank2_check(builtin_shift("ex1"));
  EXPECT_TRUE(ex1.commute);
  EXPECT_TRUE(ex1.unique_factorization);
  const auto fs = rank2_check(builtin_shift("full-shift-2"));
  EXPECT_TRUE(fs.commute);
  EXPECT_FALSE(fs.unique_factorization);
  EXPECT_TRUE(fs.witness.has_value());
  const auto led = rank2_check(builtin_shift("ledrappier"));
  EXPECT_TRUE(led.commute);
  EXPECT_TRUE(led.unique_factorization);
  EXPECT_FALSE(rank2_check(builtin_shift("ex2")).commute);
}

TEST(Rank2Check, FactorizationMatchesCompletionCounts) {
  testing::Gen gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = gen.coherent_shift(3);
    const auto k = x.size();
    bool unique = true;
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t mid = 0; mid < k; ++mid)
        for (std::size_t b = 0; b < k; ++b) {
          if (x.a(c, mid) && x.b(mid, b)) {  // right then up: corner a with B(c,a), A(a,b)
            std::size_t n = 0;
            for (std::size_t a = 0; a < k; ++a) n += x.b(c, a) && x.a(a, b);
            unique = unique && n == 1;
          }
          if (x.b(c, mid) && x.a(mid, b)) {  // up then right: corner d with A(c,d), B(d,b)
            std::size_t n = 0;
            for (std::size_t d = 0; d < k; ++d) n += x.a(c, d) && x.b(d, b);
            unique = unique && n == 1;
          }
        }
    EXPECT_EQ(rank2_check(x).unique_factorization, unique);
    EXPECT_EQ(rank2_check(x).commute, multiply(x.a, x.b) == multiply(x.b, x.a));
  }
}

TEST(TileRectangle, CountsAgreeWithEnumeration) {
  for (const auto& x : testing::all_builtin_shifts())
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t n = 1; n <= 4; ++n) {
        if (std::pow(static_cast<double>(x.size()), static_cast<double>(m * n)) > 70000 && m * n > 9) continue;
        const auto expected = enumerate_blocks(x, m, n).size();
        EXPECT_EQ(tile_rectangle(x, m, n, TileMode::count).count, expected) << x.name << m << n;
        EXPECT_EQ(count_blocks(x, m, n), expected) << x.name << m << n;
      }
}

TEST(TileRectangle, ModesAndEmptyCase) {
  const auto gm = builtin_shift("golden-mean");
  const auto all = tile_rectangle(gm, 2, 2, TileMode::all);
  EXPECT_EQ(all.count, 7);
  EXPECT_EQ(all.blocks, enumerate_blocks(gm, 2, 2));
  const auto w = tile_rectangle(gm, 3, 3, TileMode::witness);
  ASSERT_EQ(w.blocks.size(), 1u);
  EXPECT_TRUE(locally_admissible(gm, w.blocks[0]));

  const auto chain = make_shift(IntMatrix::all_ones(2), IntMatrix{{0, 1}, {0, 0}});
  EXPECT_EQ(tile_rectangle(chain, 1, 3, TileMode::count).count, 0);
  EXPECT_TRUE(tile_rectangle(chain, 1, 3, TileMode::witness).blocks.empty());
  EXPECT_EQ(tile_rectangle(builtin_shift("full-shift-2"), 3, 4, TileMode::count).count, 1 << 12);
}

TEST(CountBlocks, LargeFullShiftIsExact) {
  const auto x = builtin_shift("full-shift-2");
  EXPECT_EQ(count_blocks(x, 8, 8), BigInt(1) << 64);
}

TEST(Entropy, Table) {
  const auto fs = entropy_table(builtin_shift("full-shift-2"), 5);
  ASSERT_EQ(fs.size(), 5u);
  for (const auto& r : fs) EXPECT_DOUBLE_EQ(r.rate, 1.0);
  const auto one = entropy_table(make_shift(IntMatrix{{1}}, IntMatrix{{1}}), 3);
  for (const auto& r : one) EXPECT_DOUBLE_EQ(r.rate, 0.0);
  const auto gm = entropy_table(builtin_shift("golden-mean"), 2);
  EXPECT_EQ(gm[1].count, 7);
  EXPECT_NEAR(gm[1].rate, std::log2(7.0) / 4.0, 1e-12);
}

}  // namespace
}  // namespace weave
