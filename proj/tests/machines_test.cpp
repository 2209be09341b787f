#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permdek/enumerate.hpp"
#include "permdek/machines.hpp"

namespace permdek {
namespace {

MachineOp in(int v) { return {OpKind::move_in, v}; }
MachineOp out(int v) { return {OpKind::emit, v}; }
MachineOp xf(int v) { return {OpKind::xfer, v}; }

const Permutation kStackExample{2, 1, 5, 7, 6, 4, 3};
const Permutation kQueueExample{2, 1, 5, 7, 3, 4, 6};

TEST(Stack, PushPopTrace) {
  const auto r = realize_with_stack(kStackExample, false);
  ASSERT_TRUE(r);
  EXPECT_EQ(r.trace->ops,
            (std::vector<MachineOp>{in(1), in(2), out(2), out(1), in(3), in(4), in(5), out(5),
                                    in(6), in(7), out(7), out(6), out(4), out(3)}));
  EXPECT_EQ(r.trace->heights.back(), 0);
  EXPECT_EQ(r.trace->output, kStackExample);
  EXPECT_EQ(trace_height_profile(*r.trace).word(), "UUDDUUUDUUDDDD");
}

TEST(Stack, TransferTrace) {
  const auto r = realize_with_stack(kStackExample, true);
  ASSERT_TRUE(r);
  EXPECT_EQ(r.trace->ops, (std::vector<MachineOp>{in(1), xf(2), out(1), in(3), in(4), xf(5),
                                                  in(6), xf(7), out(6), out(4), out(3)}));
  EXPECT_EQ(r.trace->heights, (std::vector<int>{1, 1, 0, 1, 2, 2, 3, 3, 2, 1, 0}));
  EXPECT_EQ(trace_height_profile(*r.trace).word(), "UHDUUHUHDDD");
}

TEST(Stack, BlockedBy312) {
  for (bool xfer : {false, true}) {
    const auto r = realize_with_stack(Permutation{3, 1, 2}, xfer);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.blocker->values, (std::array<int, 3>{3, 1, 2}));
    EXPECT_EQ(r.blocker->positions, (std::array<int, 3>{1, 2, 3}));
  }
}

TEST(Queue, LazyTrace) {
  const auto r = realize_with_queue(kQueueExample);
  ASSERT_TRUE(r);
  EXPECT_EQ(r.trace->ops, (std::vector<MachineOp>{in(1), xf(2), out(1), in(3), in(4), xf(5),
                                                  in(6), xf(7), out(3), out(4), out(6)}));
  EXPECT_EQ(r.trace->heights, (std::vector<int>{1, 1, 0, 1, 2, 2, 3, 3, 2, 1, 0}));
  EXPECT_EQ(trace_height_profile(*r.trace).word(), "UHDUUHUHDDD");
}

TEST(Queue, BlockedBy321) {
  const auto r = realize_with_queue(Permutation{3, 2, 1});
  ASSERT_FALSE(r);
  EXPECT_EQ(r.blocker->values, (std::array<int, 3>{3, 2, 1}));
}

TEST(Queue, IdentityIsAllTransfers) {
  for (int n = 0; n <= 6; ++n) {
    const auto r = realize_with_queue(Permutation::identity(n));
    ASSERT_TRUE(r);
    for (const auto& op : r.trace->ops) EXPECT_EQ(op.kind, OpKind::xfer);
    EXPECT_EQ(r.trace->heights, std::vector<int>(static_cast<std::size_t>(n), 0));
    EXPECT_EQ(trace_height_profile(*r.trace).word(), std::string(static_cast<std::size_t>(n), 'H'));
    EXPECT_EQ(storage_cost(*r.trace), 0);
  }
}

TEST(Set, LazyTrace) {
  const auto t = realize_with_set(Permutation{3, 1, 2});
  EXPECT_EQ(t.ops, (std::vector<MachineOp>{in(1), in(2), xf(3), out(1), out(2)}));
  EXPECT_EQ(t.heights, (std::vector<int>{1, 2, 2, 1, 0}));
  EXPECT_EQ(storage_cost(t), 6);

  const auto id = realize_with_set(Permutation{1, 2, 3});
  EXPECT_EQ(id.ops, (std::vector<MachineOp>{xf(1), xf(2), xf(3)}));
  EXPECT_EQ(id.heights, (std::vector<int>{0, 0, 0}));
}

TEST(Set, MatchesStackOnStackable) {
  const auto set = realize_with_set(kStackExample);
  const auto stack = realize_with_stack(kStackExample, true);
  ASSERT_TRUE(stack);
  ASSERT_EQ(set.ops.size(), stack.trace->ops.size());
  for (std::size_t i = 0; i < set.ops.size(); ++i) {
    EXPECT_EQ(set.ops[i].kind, stack.trace->ops[i].kind);
  }
  EXPECT_EQ(set.heights, stack.trace->heights);
}

TEST(Replay, RejectsIllegalOps) {
  const std::vector<MachineOp> ok{in(1), xf(2), out(1)};
  EXPECT_EQ(replay(MachineKind::stack, ok, 2).output, (Permutation{2, 1}));

  const std::vector<MachineOp> wrong_input{in(2)};
  EXPECT_THROW(replay(MachineKind::stack, wrong_input, 2), TraceError);
  const std::vector<MachineOp> pop_empty{out(1)};
  EXPECT_THROW(replay(MachineKind::queue, pop_empty, 1), TraceError);
  const std::vector<MachineOp> stack_order{in(1), in(2), out(1), out(2)};
  EXPECT_THROW(replay(MachineKind::stack, stack_order, 2), TraceError);
  EXPECT_NO_THROW(replay(MachineKind::queue, stack_order, 2));
  EXPECT_NO_THROW(replay(MachineKind::set, stack_order, 2));
  const std::vector<MachineOp> unfinished{in(1)};
  EXPECT_THROW(replay(MachineKind::set, unfinished, 1), TraceError);
  EXPECT_THROW(replay(MachineKind::set, ok, 3), TraceError);
}

TEST(Render, TraceText) {
  const auto t = realize_with_set(Permutation{3, 1, 2});
  EXPECT_EQ(render_trace(t), "IN 1\nIN 2\nXFER 3\nOUT 1\nOUT 2\n1,2,2,1,0\n");
}

// Each procedure succeeds exactly on its avoidance class, and failures come
// with a genuine occurrence of the forbidden pattern.
TEST(Machines, ExhaustiveAgainstOracle) {
  auto genuine = [](const Permutation& p, const PatternWitness& w) {
    for (int i = 0; i < 3; ++i) {
      if (p[w.positions[i] - 1] != w.values[i]) return false;
      if (i && w.positions[i] <= w.positions[i - 1]) return false;
    }
    return true;
  };
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const bool s = !oracle::has_312(p);
      const bool q = !oracle::has_321(p);
      const auto pp = realize_with_stack(p, false);
      const auto sx = realize_with_stack(p, true);
      const auto qu = realize_with_queue(p);
      ASSERT_EQ(static_cast<bool>(pp), s) << p.to_string();
      ASSERT_EQ(static_cast<bool>(sx), s) << p.to_string();
      ASSERT_EQ(static_cast<bool>(qu), q) << p.to_string();
      if (!s) {
        const auto [a, b, c] = sx.blocker->values;
        ASSERT_TRUE(b < c && c < a && genuine(p, *sx.blocker)) << p.to_string();
      }
      if (!q) {
        const auto [a, b, c] = qu.blocker->values;
        ASSERT_TRUE(a > b && b > c && genuine(p, *qu.blocker)) << p.to_string();
      }
      const auto set = realize_with_set(p);
      ASSERT_EQ(replay(MachineKind::set, set.ops, n).output, p);
      ASSERT_TRUE(trace_height_profile(set).is_peakless_weak_dyck());
      if (s) {
        ASSERT_EQ(replay(MachineKind::stack, sx.trace->ops, n).heights, sx.trace->heights);
        ASSERT_TRUE(trace_height_profile(*pp.trace).is_dyck());
        ASSERT_EQ(trace_height_profile(*pp.trace).length(), static_cast<std::size_t>(2 * n));
      }
      if (q) {
        ASSERT_EQ(replay(MachineKind::queue, qu.trace->ops, n).heights, qu.trace->heights);
      }
    });
  }
}

// The canonical traces are the cheapest legal ones, in both op count and
// storage cost, among every interleaving the brute-force enumerator finds.
TEST(Machines, CanonicalTracesAreMinimal) {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      if (const auto r = realize_with_stack(p, true)) {
        const auto all = oracle::all_traces(p, oracle::Discipline::stack);
        ASSERT_GE(all.traces, 1U);
        ASSERT_EQ(static_cast<int>(r.trace->ops.size()), all.min_ops) << p.to_string();
        ASSERT_EQ(storage_cost(*r.trace), all.min_storage) << p.to_string();
      }
      if (const auto r = realize_with_queue(p)) {
        const auto all = oracle::all_traces(p, oracle::Discipline::queue);
        ASSERT_EQ(static_cast<int>(r.trace->ops.size()), all.min_ops) << p.to_string();
        ASSERT_EQ(storage_cost(*r.trace), all.min_storage) << p.to_string();
      } else {
        ASSERT_EQ(oracle::all_traces(p, oracle::Discipline::queue).traces, 0U);
      }
    });
  }
}

TEST(Machines, QueueExampleStorageIsMinimal) {
  const auto r = realize_with_queue(kQueueExample);
  ASSERT_TRUE(r);
  const auto all = oracle::all_traces(kQueueExample, oracle::Discipline::queue);
  EXPECT_GT(all.traces, 1U);
  EXPECT_EQ(storage_cost(*r.trace), all.min_storage);
}

}  // namespace
}  // namespace permdek
