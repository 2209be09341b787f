// The OpenMP sweeps must match their serial references exactly, whatever
// the thread count.

#include <omp.h>

#include <gtest/gtest.h>

#include "permdek/dek.hpp"
#include "permdek/enumerate.hpp"

namespace permdek {
namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(ThreadCount, CountPermutationsIf) {
  auto pred = [](const Permutation& p) { return p[0] < p[p.size() - 1]; };
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count_permutations_if(n, pred), count_permutations_if_serial(n, pred)) << n;
  }
  EXPECT_EQ(count_permutations_if(0, [](const Permutation&) { return true; }), 1U);
}

TEST_P(ThreadCount, CountObtainable) {
  for (const char* name : {"two-stacks", "stack-queue", "two-queues", "deque"}) {
    const auto c = MachineConfig::parse(name, true);
    for (int n = 0; n <= 7; ++n) {
      EXPECT_EQ(count_obtainable(c, n).count, count_obtainable_serial(c, n).count)
          << name << ' ' << n;
    }
  }
}

TEST_P(ThreadCount, CountWinnable) {
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(count_winnable(n), count_winnable_serial(n)) << n;
    EXPECT_EQ(count_winnable(n, {true, true}), count_winnable_serial(n, {true, true})) << n;
  }
  EXPECT_EQ(win_probability_clairvoyant(6), win_probability_clairvoyant_serial(6));
}

TEST_P(ThreadCount, ExceptionsPropagate) {
  auto boom = [](const Permutation& p) -> bool {
    if (p[0] == 3) throw std::runtime_error("boom");
    return true;
  };
  EXPECT_THROW(count_permutations_if(7, boom), std::runtime_error);
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));

}  // namespace
}  // namespace permdek
