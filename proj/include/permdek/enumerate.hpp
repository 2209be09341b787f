#pragma once

// Exhaustive generation over S_n, the parallel-container obtainability
// search, count tables, and the exhaustive bijection report.
//
// Sweeps over S_n come in two flavours: an OpenMP kernel that splits the
// lexicographic rank range into chunks, and a `_serial` reference that
// walks it in one pass. Results must agree bit for bit.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permdek/numeric.hpp"
#include "permdek/perm.hpp"

namespace permdek {

inline constexpr int kMaxEnumeration = 10;

/// Lexicographic rank -> permutation of size n.
Permutation unrank_permutation(int n, std::uint64_t rank);

/// Visits S_n in lexicographic order, ranks [first, last).
void for_each_permutation(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Permutation&)>& visit);
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(int n);

using PermutationPredicate = std::function<bool(const Permutation&)>;

/// |{p in S_n : pred(p)}|. `pred` must be safe to call concurrently.
std::uint64_t count_permutations_if(int n, const PermutationPredicate& pred);
std::uint64_t count_permutations_if_serial(int n, const PermutationPredicate& pred);

enum class ContainerKind { stack, queue, deque };

std::string_view to_string(ContainerKind k);

/// One or two containers working side by side: any container may take the
/// input front, and any container exit (or a direct transfer, when allowed)
/// may feed the output.
struct MachineConfig {
  std::vector<ContainerKind> containers;
  bool xfer_allowed = true;

  void validate() const;

  /// "stack", "two-stacks", "stack-queue", ... followed by "+xfer" or
  /// "-xfer".
  std::string name() const;

  /// Accepts the CLI machine names: stack, queue, deque, two-stacks,
  /// two-queues, two-deques, stack-queue, stack-deque, queue-deque.
  static MachineConfig parse(std::string_view machine, bool xfer_allowed);

  friend bool operator==(const MachineConfig&, const MachineConfig&) = default;
};

struct SearchOptions {
  bool memoize = true;
  bool canonicalize = true;  // symmetry reduction of memo keys
};

inline constexpr int kMaxObtainable = 9;
inline constexpr int kMaxCount = 8;

/// Depth-first search over machine states for a move sequence producing p.
bool obtainable(const MachineConfig& config, const Permutation& p,
                SearchOptions options = {});

struct CountTable {
  int n = 0;
  MachineConfig config;
  BigInt count;
  std::chrono::duration<double, std::milli> elapsed{};
};

CountTable count_obtainable(const MachineConfig& config, int n);
CountTable count_obtainable_serial(const MachineConfig& config, int n);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct BijectionReport {
  int n = 0;
  std::uint64_t stackable = 0;
  std::uint64_t queueable = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_string() const;
};

inline constexpr int kMaxVerify = 8;

/// Runs every exhaustive invariant of the permutation, machine and path
/// modules over S_n.
BijectionReport verify_bijection_suite(int n);

}  // namespace permdek
