#include "test_util.hpp"

using namespace symfact;

TEST(Partition, Weight) {
  EXPECT_EQ(weight(Partition{2, 1, 0}), 3);
  EXPECT_EQ(weight(Partition{0, 0}), 0);
  EXPECT_EQ(weight(Partition{3, 3, 1}), 7);
}

TEST(Partition, RejectsUnsorted) {
  EXPECT_THROW(Partition({1, 2}), StructuralError);
  EXPECT_THROW(Partition({1, -1}), StructuralError);
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominance_leq(Partition{1, 1, 1}, Partition{3, 0, 0}));
  EXPECT_TRUE(dominance_leq(Partition{2, 1}, Partition{2, 1}));
  EXPECT_TRUE(dominance_leq(Partition{2, 2, 0}, Partition{3, 1, 0}));
  EXPECT_FALSE(dominance_leq(Partition{3, 1, 0}, Partition{2, 2, 0}));
  EXPECT_FALSE(dominance_leq(Partition{1, 0}, Partition{2, 0}));
  EXPECT_THROW(dominance_leq(Partition{1, 0}, Partition{1, 0, 0}), StructuralError);
}

TEST(Partition, Staircase) {
  EXPECT_EQ(staircase_shift(Partition{1, 0}).parts(), (std::vector<int>{2, 0}));
  EXPECT_EQ(staircase_shift(Partition{0, 0, 0}).parts(), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(staircase_shift(Partition{2, 1, 0}).parts(), (std::vector<int>{4, 2, 0}));
}

TEST(Partition, Enumerate) {
  EXPECT_EQ(enumerate_partitions(1, 2), (std::vector<Partition>{{0, 0}, {1, 0}}));
  EXPECT_EQ(enumerate_partitions(2, 2), (std::vector<Partition>{{0, 0}, {1, 0}, {2, 0}, {1, 1}}));
  EXPECT_EQ(enumerate_partitions(4, 3).size(), 11u);
}

TEST(Partition, EnumerationMatchesBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int w = 0; w <= 6; ++w) {
      std::size_t brute = 0;
      std::vector<int> v(n, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
        if (i == n) {
          int s = std::accumulate(v.begin(), v.end(), 0);
          brute += s <= w ? 1 : 0;
          return;
        }
        for (int a = 0; a <= cap; ++a) {
          v[i] = a;
          rec(i + 1, a);
        }
      };
      rec(0, w);
      EXPECT_EQ(enumerate_partitions(w, n).size(), brute) << "n=" << n << " w=" << w;
    }
}

TEST(Partition, OrderProperties) {
  auto all = enumerate_partitions(6, 4);
  for (const auto& a : all) {
    auto mu = a.staircase_shift();
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) EXPECT_GT(mu[i], mu[i + 1]);
    EXPECT_EQ(mu.weight(), a.weight() + 6);
    EXPECT_TRUE(dominance_leq(a, a));
    for (const auto& b : all) {
      if (a.weight() != b.weight()) continue;
      if (dominance_leq(a, b) && dominance_leq(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : all)
        if (c.weight() == a.weight() && dominance_leq(a, b) && dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c));
    }
  }
}

TEST(Partition, Deterministic) { EXPECT_EQ(enumerate_partitions(5, 3), enumerate_partitions(5, 3)); }
