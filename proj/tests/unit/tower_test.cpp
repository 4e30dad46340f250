#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "weave/tower.hpp"

namespace weave {
namespace {

using testing::builtin_shift;

const IntMatrix kA2{{1, 1, 1}, {1, 0, 1}, {1, 1, 0}};
const IntMatrix kA3{{1, 1, 1, 1, 1}, {1, 0, 1, 1, 0}, {1, 1, 0, 1, 1}, {1, 1, 1, 0, 0}, {1, 0, 1, 0, 0}};
const IntMatrix kA4{{1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1, 0, 1}, {1, 1, 0, 1, 1, 1, 1, 0},
                    {1, 1, 1, 0, 0, 1, 1, 1}, {1, 0, 1, 0, 0, 1, 0, 1}, {1, 1, 1, 1, 1, 0, 0, 0},
                    {1, 0, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 1, 1, 0, 0, 0}};

long long entry_sum(const IntMatrix& m) { return m.sum(); }

TEST(Tower, GoldenMeanReferenceLevels) {
  const auto tw = tower(builtin_shift("golden-mean"), Side::A, 4);
  ASSERT_EQ(tw.levels.size(), 4u);
  EXPECT_EQ(tw.levels[0].matrix, testing::golden_mean());
  EXPECT_EQ(tw.levels[1].matrix, kA2);
  EXPECT_EQ(tw.levels[2].matrix, kA3);
  EXPECT_EQ(tw.levels[3].matrix, kA4);
  EXPECT_EQ(tw.k_sequence(), (std::vector<std::size_t>{2, 3, 5, 8}));
}

TEST(Tower, GoldenMeanFibonacciAndTailDeletion) {
  const auto tw = tower(builtin_shift("golden-mean"), Side::A, 8);
  const auto ks = tw.k_sequence();
  for (std::size_t n = 2; n < ks.size(); ++n) EXPECT_EQ(ks[n], ks[n - 1] + ks[n - 2]);
  for (std::size_t n = 1; n < tw.levels.size(); ++n) {
    const auto kn = tw.levels[n - 1].k(), kn1 = tw.levels[n].k();
    std::vector<std::size_t> tail;
    for (std::size_t i = kn1; i < 2 * kn; ++i) tail.push_back(i);
    EXPECT_EQ(tw.levels[n].deleted_indices, tail);
    EXPECT_TRUE(tw.tail_deletion[n - 1]);
  }
}

TEST(Tower, GoldenMeanSidesAgree) {
  const auto x = builtin_shift("golden-mean");
  const auto a = tower(x, Side::A, 5), b = tower(x, Side::B, 5);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(a.levels[n].matrix, b.levels[n].matrix);
}

TEST(Tower, FullShiftHasNoDeletions) {
  const auto x = builtin_shift("full-shift-2");
  for (auto side : {Side::A, Side::B}) {
    const auto tw = tower(x, side, 6);
    for (std::size_t n = 1; n < tw.levels.size(); ++n) {
      EXPECT_TRUE(tw.levels[n].deleted_indices.empty());
      EXPECT_EQ(tw.levels[n].matrix, kronecker(x.a, tw.levels[n - 1].matrix));
      EXPECT_EQ(tw.levels[n].k(), 1u << (n + 1));
    }
  }
}

TEST(Tower, Ex1PermutationTower) {
  const auto x = builtin_shift("ex1");
  const auto b = tower(x, Side::B, 4);
  EXPECT_EQ(b.levels[1].matrix, (IntMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  const auto a = tower(x, Side::A, 4);
  for (std::size_t n = 0; n < 4; ++n) {
    EXPECT_TRUE(is_permutation(b.levels[n].matrix));
    EXPECT_EQ(b.levels[n].k(), 2u << n);
    EXPECT_EQ(a.levels[n].matrix, IntMatrix::all_ones(2));
  }
}

TEST(Tower, KnEqualsEntrySumOfPowers) {
  std::vector<MatrixShift> shifts = testing::all_builtin_shifts();
  testing::Gen gen(53);
  for (int i = 0; i < 20; ++i) shifts.push_back(gen.coherent_shift(3));
  for (const auto& x : shifts) {
    const auto a = tower(x, Side::A, 4), b = tower(x, Side::B, 4);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto k = static_cast<long long>(x.size());
      EXPECT_EQ(static_cast<long long>(a.levels[n - 1].k()), n == 1 ? k : entry_sum(power(x.b, n - 1)));
      EXPECT_EQ(static_cast<long long>(b.levels[n - 1].k()), n == 1 ? k : entry_sum(power(x.a, n - 1)));
    }
  }
}

TEST(Tower, StructuralInvariants) {
  testing::Gen gen(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = gen.coherent_shift(3);
    for (auto side : {Side::A, Side::B}) {
      const auto tw = tower(x, side, 4);
      EXPECT_EQ(tw.levels[0].matrix, side == Side::A ? x.a : x.b);
      for (std::size_t n = 1; n < tw.levels.size(); ++n) {
        const auto& lvl = tw.levels[n];
        EXPECT_LE(lvl.k(), x.size() * tw.levels[n - 1].k());
        EXPECT_EQ(lvl.parent_indices.size(), lvl.k());
        EXPECT_TRUE(std::is_sorted(lvl.parent_indices.begin(), lvl.parent_indices.end()));
        EXPECT_EQ(std::adjacent_find(lvl.parent_indices.begin(), lvl.parent_indices.end()), lvl.parent_indices.end());
        EXPECT_EQ(lvl.matrix.rows(), lvl.k());
        const auto parent = kronecker(side == Side::A ? x.a : x.b, tw.levels[n - 1].matrix);
        EXPECT_EQ(lvl.matrix, principal_submatrix(parent, lvl.parent_indices));
        EXPECT_EQ(lvl.k() == x.size() * tw.levels[n - 1].k(), lvl.deleted_indices.empty());
      }
    }
  }
}

TEST(Tower, OracleAgreement) {
  std::vector<MatrixShift> shifts = testing::all_builtin_shifts();
  testing::Gen gen(61);
  for (int i = 0; i < 50; ++i) shifts.push_back(gen.coherent_shift(3));
  for (const auto& x : shifts)
    for (auto side : {Side::A, Side::B}) {
      const auto tw = tower(x, side, 4);
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto o = oracle_level(x, side, n);
        EXPECT_EQ(o.matrix, tw.levels[n - 1].matrix) << x.name << " " << to_string(side) << n;
        EXPECT_EQ(o.strip_alphabet, tw.levels[n - 1].strip_alphabet);
      }
    }
}

TEST(Tower, OracleSpecificValues) {
  EXPECT_EQ(oracle_level(builtin_shift("golden-mean"), Side::A, 3).matrix, kA3);
  EXPECT_EQ(oracle_level(builtin_shift("full-shift-2"), Side::A, 3).matrix, IntMatrix::all_ones(8));
  EXPECT_EQ(oracle_level(builtin_shift("ex2"), Side::A, 2).k(), 9u);
}

TEST(Tower, StripOrderIsTopFirst) {
  const auto lvl = tower(builtin_shift("golden-mean"), Side::A, 2).levels[1];
  std::vector<std::string> names;
  for (const auto& b : lvl.strip_alphabet) names.push_back(block_name(builtin_shift("golden-mean"), b));
  EXPECT_EQ(names, (std::vector<std::string>{"0/0", "0/1", "1/0"}));
}

TEST(Tower, NonCoherentInputWarns) {
  const MatrixShift x{"nc", {"0", "1"}, IntMatrix{{1, 1}, {1, 0}}, IntMatrix{{1, 0}, {1, 1}}};
  const auto tw = tower(x, Side::A, 3);
  EXPECT_FALSE(tw.warnings.empty());
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(oracle_level(x, Side::A, n).matrix, tw.levels[n - 1].matrix);
}

TEST(Tower, BudgetIsHard) {
  EXPECT_THROW(tower(builtin_shift("full-shift-2"), Side::A, 12, Budget{1000}), BudgetExceeded);
}

}  // namespace
}  // namespace weave
