#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "weave/pattern.hpp"

namespace weave {
namespace {

CellularAutomaton swap_ca() { return testing::builtin("swap-ca").automata.at(0); }
CellularAutomaton xor_ca() { return testing::builtin("ledrappier").automata.at(0); }

PatternShift2D ledrappier_pattern() {
  return make_pattern_shift("L", {"0", "1"}, {{0, 0}, {1, 0}, {0, 1}},
                            {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

TEST(CellularAutomaton, SwapRecoversEx1) {
  const auto x = from_cellular_automaton(swap_ca());
  EXPECT_EQ(x.a, IntMatrix::all_ones(2));
  EXPECT_EQ(x.b, (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(x.a, testing::builtin_shift("ex1").a);
  EXPECT_EQ(x.b, testing::builtin_shift("ex1").b);
}

TEST(CellularAutomaton, IdentityRuleGivesIdentityB) {
  auto ca = swap_ca();
  ca.rule = {{{0}, 0}, {{1}, 1}};
  EXPECT_EQ(from_cellular_automaton(ca).b, IntMatrix::identity(2));
}

TEST(CellularAutomaton, XorWindowTwoReproducesLedrappierMatrices) {
  const auto x = from_cellular_automaton(xor_ca());
  const auto stored = testing::builtin_shift("ledrappier");
  EXPECT_EQ(x.alphabet, (std::vector<std::string>{"00", "01", "10", "11"}));
  EXPECT_EQ(x.a, stored.a);
  EXPECT_EQ(x.b, stored.b);
}

TEST(CellularAutomaton, XorCountsOverStates) {
  const auto ps = pattern_of_cellular_automaton(xor_ca());
  EXPECT_EQ(enumerate_pattern_blocks(ps, 2, 2).size(), 8u);
  // Over two-symbol words each 2x2 block of words spans a 3x2 window of states.
  const auto x = from_cellular_automaton(xor_ca());
  EXPECT_EQ(enumerate_blocks(x, 1, 2).size(), 8u);
  EXPECT_EQ(enumerate_blocks(x, 2, 2).size(), 16u);
}

TEST(CellularAutomaton, SpaceTimeRowsFollowTheRule) {
  const auto ps = pattern_of_cellular_automaton(xor_ca());
  for (const auto& b : enumerate_pattern_blocks(ps, 3, 3)) {
    for (std::size_t j = 0; j + 1 < 3; ++j)
      for (std::size_t i = 0; i + 1 < 3; ++i) EXPECT_EQ(b.at(i, j + 1), (b.at(i, j) + b.at(i + 1, j)) % 2);
  }
}

TEST(CellularAutomaton, PartialRuleRejected) {
  auto ca = xor_ca();
  ca.rule.erase({1, 1});
  EXPECT_THROW(require_total_rule(ca), ValidationError);
  EXPECT_THROW(from_cellular_automaton(ca), ValidationError);
}

TEST(CellularAutomaton, RestrictedStateShift) {
  // Golden-mean Y with the identity rule: space-time shift is X(C, I) on words.
  CellularAutomaton ca{"gm", {"0", "1"}, testing::golden_mean(), 2, {}};
  for (const auto& w : admissible_words(ca)) ca.rule[w] = w[0];
  EXPECT_EQ(admissible_words(ca).size(), 3u);
  const auto x = from_cellular_automaton(ca);
  EXPECT_EQ(x.size(), 3u);
  const auto words = admissible_words(ca);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v) {
      const auto& wu = words[u];
      const auto& wv = words[v];
      EXPECT_EQ(x.a(u, v), wu[1] == wv[0] ? 1 : 0);
      EXPECT_EQ(x.b(u, v), wv[0] == wu[0] ? 1 : 0);
    }
}

TEST(Recode, LedrappierPatternGivesStoredAlphabetAndMatrices) {
  const auto r = recode_to_matrix_shift(ledrappier_pattern());
  const auto stored = testing::builtin_shift("ledrappier");
  EXPECT_EQ(r.shift.alphabet, stored.alphabet);
  EXPECT_EQ(r.shift.a, stored.a);
  EXPECT_EQ(r.shift.b, stored.b);
}

TEST(Recode, NearestNeighbourCountsMatchOriginalShift) {
  auto shifts = testing::all_builtin_shifts();
  testing::Gen gen(41);
  for (int i = 0; i < 10; ++i) shifts.push_back(gen.coherent_shift(3));
  for (const auto& x : shifts) {
    const auto ps = pattern_of_matrix_shift(x);
    const auto r = recode_to_matrix_shift(ps);
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        if (m * n > 6 && x.size() > 2) continue;
        EXPECT_EQ(enumerate_blocks(r.shift, m, n).size(), testing::covered_assignments(ps, r.region, m, n))
            << x.name << " " << m << "x" << n;
      }
  }
}

TEST(Recode, BoundingBoxWindowCountsMatchCoveredAssignments) {
  // Window {(0,0),(1,1)}: a diagonal rule that needs a 2x2 box.
  const auto ps = make_pattern_shift("diag", {"0", "1"}, {{0, 0}, {1, 1}}, {{0, 0}, {0, 1}, {1, 1}});
  const auto r = recode_to_matrix_shift(ps);
  EXPECT_EQ(r.region.size(), 4u);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n)
      EXPECT_EQ(enumerate_blocks(r.shift, m, n).size(), testing::covered_assignments(ps, r.region, m, n));
}

TEST(Recode, AllPatternsGiveFullShiftOnBlocks) {
  const auto ps = make_pattern_shift("full", {"0", "1"}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto r = recode_to_matrix_shift(ps);
  EXPECT_EQ(r.shift.size(), 4u);
  EXPECT_EQ(r.shift.b, IntMatrix::all_ones(4));
}

TEST(Recode, Errors) {
  EXPECT_THROW(make_pattern_shift("e", {"0"}, {}, {{}}), InvalidArgument);
  EXPECT_THROW(make_pattern_shift("e", {"0"}, {{0, 0}}, {}), InvalidArgument);
  const auto wide = make_pattern_shift("w", {"0", "1"}, {{0, 0}, {20, 0}}, {{0, 0}});
  EXPECT_THROW(recode_to_matrix_shift(wide), BudgetExceeded);
}

TEST(PatternOfMatrixShift, AdmissibleBlocksAreFilteredPatternBlocks) {
  for (const auto& x : testing::all_builtin_shifts()) {
    const auto ps = pattern_of_matrix_shift(x);
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 2; ++n) {
        std::vector<Block> filtered;
        for (const auto& b : enumerate_pattern_blocks(ps, m, n))
          if (locally_admissible(x, b)) filtered.push_back(b);
        EXPECT_EQ(filtered, enumerate_blocks(x, m, n)) << x.name << " " << m << "x" << n;
      }
  }
}

}  // namespace
}  // namespace weave
