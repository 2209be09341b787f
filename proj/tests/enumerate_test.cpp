#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permdek/dyck.hpp"
#include "permdek/enumerate.hpp"

namespace permdek {
namespace {

using K = ContainerKind;

TEST(AllPermutations, Order) {
  const auto zero = all_permutations(0);
  ASSERT_EQ(zero.size(), 1U);
  EXPECT_TRUE(zero[0].empty());

  const auto three = all_permutations(3);
  ASSERT_EQ(three.size(), 6U);
  EXPECT_EQ(three.front(), (Permutation{1, 2, 3}));
  EXPECT_EQ(three.back(), (Permutation{3, 2, 1}));
  EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));

  EXPECT_EQ(all_permutations(8).size(), 40320U);
  EXPECT_THROW(all_permutations(kMaxEnumeration + 1), std::out_of_range);
}

TEST(AllPermutations, RangesTileTheWholeSweep) {
  const auto all = all_permutations(6);
  std::vector<Permutation> pieces;
  for (std::uint64_t first = 0; first < 720; first += 97) {
    for_each_permutation(6, first, std::min<std::uint64_t>(first + 97, 720),
                         [&](const Permutation& p) { pieces.push_back(p); });
  }
  EXPECT_EQ(pieces, all);
  for (std::uint64_t r = 0; r < 720; r += 37) EXPECT_EQ(unrank_permutation(6, r), all[r]);
  EXPECT_THROW(unrank_permutation(3, 6), std::out_of_range);
}

TEST(MachineConfig, NamesAndParse) {
  EXPECT_EQ(MachineConfig::parse("two-stacks", true).name(), "two-stacks+xfer");
  EXPECT_EQ(MachineConfig::parse("stack-queue", false).name(), "stack-queue-xfer");
  EXPECT_EQ(MachineConfig::parse("deque", true), (MachineConfig{{K::deque}, true}));
  EXPECT_THROW(MachineConfig::parse("three-stacks", true), std::invalid_argument);
  EXPECT_THROW((MachineConfig{{}, true}).validate(), std::invalid_argument);
  EXPECT_THROW((MachineConfig{{K::stack, K::stack, K::stack}, true}).validate(),
               std::invalid_argument);
}

TEST(Obtainable, Examples) {
  EXPECT_FALSE(obtainable({{K::stack}, true}, Permutation{3, 1, 2}));
  EXPECT_TRUE(obtainable({{K::stack, K::stack}, true}, Permutation{3, 1, 2}));
  EXPECT_FALSE(obtainable({{K::queue, K::queue}, true}, Permutation{4, 3, 2, 1}));
  EXPECT_TRUE(obtainable({{K::queue, K::queue}, true}, Permutation{3, 2, 1}));
  EXPECT_TRUE(obtainable({{K::deque}, true}, Permutation{3, 1, 2}));
  EXPECT_TRUE(obtainable({{K::stack}, true}, Permutation{}));
  EXPECT_THROW(obtainable({{K::stack}, true}, Permutation::identity(kMaxObtainable + 1)),
               std::out_of_range);
}

// The search engine against the closed-form predicates on all of S_n.
TEST(Obtainable, SingleContainersMatchPredicates) {
  const MachineConfig stack{{K::stack}, true};
  const MachineConfig stack_pp{{K::stack}, false};
  const MachineConfig queue{{K::queue}, true};
  const MachineConfig queue_plain{{K::queue}, false};
  const MachineConfig deque{{K::deque}, true};
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const bool s = !oracle::has_312(p);
      const bool q = !oracle::has_321(p);
      ASSERT_EQ(obtainable(stack, p), s) << p.to_string();
      ASSERT_EQ(obtainable(stack_pp, p), s) << p.to_string();
      ASSERT_EQ(obtainable(queue, p), q) << p.to_string();
      ASSERT_EQ(obtainable(queue_plain, p), p == Permutation::identity(n)) << p.to_string();
      if (s || q) {
        ASSERT_TRUE(obtainable(deque, p)) << p.to_string();
      }
    });
  }
}

TEST(Obtainable, MemoAndSymmetryDoNotChangeAnswers) {
  const std::vector<MachineConfig> configs{
      {{K::stack, K::stack}, true},  {{K::stack, K::queue}, true}, {{K::queue, K::queue}, true},
      {{K::queue, K::queue}, false}, {{K::deque}, true},           {{K::deque, K::deque}, false},
      {{K::stack, K::deque}, true},  {{K::stack}, false},
  };
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> size(0, 7);
  std::uniform_int_distribution<std::size_t> pick(0, configs.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation p(v);
    const auto& c = configs[pick(rng)];
    const bool reference = obtainable(c, p, {false, false});
    ASSERT_EQ(obtainable(c, p, {true, true}), reference) << c.name() << ' ' << p.to_string();
    ASSERT_EQ(obtainable(c, p, {true, false}), reference) << c.name() << ' ' << p.to_string();
  }
}

std::uint64_t count(const MachineConfig& c, int n) {
  return count_obtainable(c, n).count.convert_to<std::uint64_t>();
}

TEST(CountObtainable, SingleContainersGiveCatalan) {
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(BigInt(count({{K::stack}, true}, n)), catalan(n));
    EXPECT_EQ(BigInt(count({{K::queue}, true}, n)), catalan(n));
  }
  EXPECT_EQ(count({{K::stack}, true}, 4), 14U);
  EXPECT_EQ(count({{K::queue}, true}, 4), 14U);
  EXPECT_THROW(count_obtainable({{K::stack}, true}, kMaxCount + 1), std::out_of_range);
}

TEST(CountObtainable, TwoQueuesMatchNoDecreasingFour) {
  const MachineConfig two_queues{{K::queue, K::queue}, true};
  for (int n = 0; n <= 7; ++n) {
    const auto expected = count_permutations_if_serial(
        n, [](const Permutation& p) { return oracle::longest_decreasing(p) < 4; });
    EXPECT_EQ(count(two_queues, n), expected) << n;
  }
}

TEST(CountObtainable, MonotoneWhenAddingAContainer) {
  const std::vector<std::pair<MachineConfig, MachineConfig>> grow{
      {{{K::stack}, true}, {{K::stack, K::stack}, true}},
      {{{K::stack}, true}, {{K::stack, K::queue}, true}},
      {{{K::queue}, true}, {{K::stack, K::queue}, true}},
      {{{K::queue}, true}, {{K::queue, K::queue}, true}},
      {{{K::deque}, true}, {{K::stack, K::deque}, true}},
      {{{K::deque}, true}, {{K::deque, K::deque}, true}},
      {{{K::queue}, false}, {{K::queue, K::queue}, false}},
  };
  for (const auto& [small, big] : grow) {
    for (int n = 0; n <= 6; ++n) {
      EXPECT_LE(count(small, n), count(big, n)) << small.name() << " vs " << big.name();
    }
  }
}

// Computed once by an independent brute-force search over move sequences
// and pinned here, n = 0..7.
TEST(CountObtainable, PinnedTables) {
  const std::vector<std::uint64_t> two_stacks{1, 1, 2, 6, 23, 103, 513, 2760};
  const std::vector<std::uint64_t> stack_queue{1, 1, 2, 6, 24, 118, 668, 4150};
  const std::vector<std::uint64_t> two_queues{1, 1, 2, 6, 23, 103, 513, 2761};
  const std::vector<std::uint64_t> two_queues_plain{1, 1, 2, 5, 14, 42, 132, 429};
  const std::vector<std::uint64_t> deque{1, 1, 2, 6, 24, 116, 634, 3762};
  for (int n = 0; n <= 7; ++n) {
    const auto i = static_cast<std::size_t>(n);
    for (bool x : {true, false}) {
      EXPECT_EQ(count({{K::stack, K::stack}, x}, n), two_stacks[i]) << n;
      EXPECT_EQ(count({{K::stack, K::queue}, x}, n), stack_queue[i]) << n;
      EXPECT_EQ(count({{K::deque}, x}, n), deque[i]) << n;
    }
    EXPECT_EQ(count({{K::queue, K::queue}, true}, n), two_queues[i]) << n;
    EXPECT_EQ(count({{K::queue, K::queue}, false}, n), two_queues_plain[i]) << n;
  }
}

TEST(CountObtainable, Deterministic) {
  const MachineConfig c{{K::stack, K::queue}, true};
  const auto a = count_obtainable(c, 6);
  const auto b = count_obtainable(c, 6);
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.n, 6);
  EXPECT_EQ(a.config, c);
  EXPECT_GE(a.elapsed.count(), 0.0);
}

}  // namespace
}  // namespace permdek
