#include <gtest/gtest.h>

#include <set>

#include "flamingo/combinat.hpp"
#include "flamingo/error.hpp"
#include "oracles.hpp"

using namespace flamingo;

TEST(Permutation, NamedElements) {
  EXPECT_EQ(Permutation::simple_transposition(4, 2).images(), (std::vector<int>{1, 3, 2, 4}));
  EXPECT_EQ(Permutation::long_cycle(4).images(), (std::vector<int>{4, 1, 2, 3}));
  EXPECT_EQ(Permutation::longest_element(4).images(), (std::vector<int>{4, 3, 2, 1}));
  EXPECT_EQ(Permutation::all(4).size(), 24u);
}

TEST(Permutation, SignsOfCycleAndLongestElement) {
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(Permutation::long_cycle(n).sign(), (n - 1) % 2 == 0 ? 1 : -1);
    EXPECT_EQ(Permutation::longest_element(n).sign(), (n * (n - 1) / 2) % 2 == 0 ? 1 : -1);
  }
}

TEST(Permutation, SignIsMultiplicative) {
  const auto perms = Permutation::all(4);
  for (const auto& a : perms) {
    EXPECT_EQ((a * a.inverse()), Permutation::identity(4));
    for (const auto& b : perms) EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
  }
}

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({1, 1, 2}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
}

TEST(InversionCount, MatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> w(12);
    for (auto& v : w) v = static_cast<int>(rng() % 20);
    EXPECT_EQ(inversion_count(w), oracle::inversions(w));
  }
}

TEST(OrderedSetPartition, ParseAndPrint) {
  const auto pi = OrderedSetPartition::parse("10 6 3 2|5 7 8 9| 1 4 ");
  EXPECT_EQ(pi.size(), 10);
  EXPECT_EQ(pi.num_blocks(), 3);
  EXPECT_EQ(pi.block(1), (Block{2, 3, 6, 10}));
  EXPECT_EQ(pi.to_string(), "2 3 6 10|5 7 8 9|1 4");
  EXPECT_EQ(OrderedSetPartition::parse(pi.to_string()), pi);
  EXPECT_EQ(pi.min_block_size(), 2);
  EXPECT_EQ(pi.block_index()[1], 3);
  EXPECT_EQ(pi.canonical().to_string(), "1 4|2 3 6 10|5 7 8 9");
}

TEST(OrderedSetPartition, RejectsMalformedText) {
  for (const char* bad : {"1 2|2 3", "1 3", "1 2||3", "a b", "", "0 1"}) {
    EXPECT_THROW(OrderedSetPartition::parse(bad), Error) << bad;
  }
}

TEST(FlamingoContext, Quantities) {
  const auto ctx = FlamingoContext::of(OrderedSetPartition::parse("2 3 6 10|5 7 8 9|1 4"), 2);
  EXPECT_EQ(ctx.nu, 6);
  EXPECT_EQ(ctx.nu_i, (std::vector<int>{2, 2, 0}));
  EXPECT_EQ(ctx.tentacle_rows(), (std::vector<int>{3, 4, 5, 6}));
  EXPECT_EQ(ctx.lower_rows(), (std::vector<int>{7, 8, 9, 10}));
  EXPECT_TRUE(ctx.admissible());
  EXPECT_FALSE(FlamingoContext::of(OrderedSetPartition::parse("2 3 6 10|5 7 8 9|1 4"), 3).admissible());
}

TEST(Enumeration, OrderedPartitionsMatchBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        const auto list = enumerate_ordered_partitions(n, d, r);
        const auto brute = oracle::ordered_assignments(n, d, r);
        ASSERT_EQ(list.size(), brute.size()) << n << ' ' << d << ' ' << r;
        for (std::size_t i = 0; i < list.size(); ++i) {
          const auto owner = list[i].block_index();
          for (int v = 1; v <= n; ++v) ASSERT_EQ(owner[static_cast<std::size_t>(v)] - 1, brute[i][static_cast<std::size_t>(v - 1)]);
        }
        std::size_t streamed = 0;
        for_each_ordered_partition(n, d, r, [&](const OrderedSetPartition& p) { EXPECT_EQ(p, list[streamed++]); });
        EXPECT_EQ(streamed, list.size());
      }
    }
  }
  EXPECT_THROW(enumerate_ordered_partitions(3, 2, 2), Error);
}

TEST(Enumeration, SetPartitionsAreCanonicalRepresentatives) {
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto list = enumerate_set_partitions(n, d, 1);
      std::set<OrderedSetPartition> canon;
      for (const auto& p : enumerate_ordered_partitions(n, d, 1)) canon.insert(p.canonical());
      EXPECT_EQ(std::set<OrderedSetPartition>(list.begin(), list.end()), canon);
      EXPECT_EQ(list.size(), canon.size());
    }
  }
}

TEST(Noncrossing, CountsAreNarayanaNumbers) {
  for (int n = 1; n <= 9; ++n) {
    for (int d = 1; d <= n; ++d) {
      const oracle::Integer narayana = oracle::binomial(n, d) * oracle::binomial(n, d - 1) / n;
      EXPECT_EQ(oracle::Integer(enumerate_noncrossing(n, d, 1).size()), narayana) << n << ' ' << d;
    }
  }
}

TEST(Noncrossing, AgreesWithQuadrupleSearch) {
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        std::size_t expected = 0;
        for (const auto& p : enumerate_set_partitions(n, d, r)) {
          std::vector<int> a(static_cast<std::size_t>(n));
          const auto owner = p.block_index();
          for (int v = 1; v <= n; ++v) a[static_cast<std::size_t>(v - 1)] = owner[static_cast<std::size_t>(v)];
          const bool nc = !oracle::crossing(a);
          EXPECT_EQ(is_noncrossing(p), nc) << p.to_string();
          EXPECT_EQ(crossing_pair_count(p) == 0, nc) << p.to_string();
          expected += nc;
        }
        EXPECT_EQ(enumerate_noncrossing(n, d, r).size(), expected);
      }
    }
  }
}

TEST(Actions, RotateReflectAndBlocks) {
  const auto pi = OrderedSetPartition::parse("1 2 3 5|4 6");
  EXPECT_EQ(rotate(pi), act_elements(Permutation::long_cycle(6), pi));
  EXPECT_EQ(reflect(pi).to_string(), "2 4 5 6|1 3");
  EXPECT_EQ(permute_blocks(Permutation({2, 1}), pi).to_string(), "4 6|1 2 3 5");
  const auto orbit = rotation_orbit(pi);
  EXPECT_EQ(orbit.size(), 6u);
  EXPECT_EQ(orbit.front(), pi);
  // Rotating n times is the identity.
  auto p = pi;
  for (int i = 0; i < 6; ++i) p = rotate(p);
  EXPECT_EQ(p, pi);
}

TEST(Actions, PermuteBlocksComposes) {
  const auto pi = OrderedSetPartition::parse("1 5|2 6|3|4");
  for (const auto& a : Permutation::all(4)) {
    for (const auto& b : Permutation::all(4)) {
      EXPECT_EQ(permute_blocks(a, permute_blocks(b, pi)), permute_blocks(a * b, pi));
    }
  }
}

TEST(TranspositionDistance, SmallCases) {
  const auto crossing = OrderedSetPartition::parse("1 3|2 4");
  EXPECT_FALSE(transposition_distance_to_noncrossing(crossing, 0));
  EXPECT_TRUE(transposition_distance_to_noncrossing(crossing, 1));
  EXPECT_TRUE(transposition_distance_to_noncrossing(OrderedSetPartition::parse("1 2|3 4"), 0));
}
