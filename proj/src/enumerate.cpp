#include "permdek/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>
#include "log.hpp"

namespace permdek {

namespace {

void check_enumeration_size(int n) {
  if (n < 0 || n > kMaxEnumeration) {
    throw std::out_of_range("permutation enumeration supports 0 <= n <= " +
                            std::to_string(kMaxEnumeration) + ", got " +
                            std::to_string(n));
  }
}

// Ranks per parallel work item. Small enough to balance, large enough
// that unranking is amortized.
constexpr std::uint64_t kChunk = 720;

}  // namespace

Permutation unrank_permutation(int n, std::uint64_t rank) {
  check_enumeration_size(n);
  if (rank >= factorial(n)) throw std::out_of_range("rank exceeds n!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return trusted_permutation(std::move(out));
}

void for_each_permutation(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Permutation&)>& visit) {
  check_enumeration_size(n);
  last = std::min(last, factorial(n));
  if (first >= last) return;
  std::vector<int> cur = unrank_permutation(n, first).vector();
  for (std::uint64_t r = first; r < last; ++r) {
    visit(trusted_permutation(cur));
    std::next_permutation(cur.begin(), cur.end());
  }
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  for_each_permutation(n, 0, factorial(n), visit);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_permutations_if(int n, const PermutationPredicate& pred) {
  check_enumeration_size(n);
  const std::uint64_t total = factorial(n);
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::uint64_t count = 0;
  std::exception_ptr failure;
  std::mutex failure_mutex;

#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto first = static_cast<std::uint64_t>(c) * kChunk;
    std::uint64_t local = 0;
    try {
      for_each_permutation(n, first, first + kChunk, [&](const Permutation& p) {
        if (pred(p)) ++local;
      });
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
    count += local;
  }
  if (failure) std::rethrow_exception(failure);
  return count;
}

std::uint64_t count_permutations_if_serial(int n, const PermutationPredicate& pred) {
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (pred(p)) ++count;
  });
  return count;
}

std::string_view to_string(ContainerKind k) {
  switch (k) {
    case ContainerKind::stack: return "stack";
    case ContainerKind::queue: return "queue";
    case ContainerKind::deque: return "deque";
  }
  return "?";
}

void MachineConfig::validate() const {
  if (containers.empty() || containers.size() > 2) {
    throw std::invalid_argument("a machine has one or two containers, got " +
                                std::to_string(containers.size()));
  }
}

std::string MachineConfig::name() const {
  std::string base;
  if (containers.size() == 2 && containers[0] == containers[1]) {
    base = "two-" + std::string(to_string(containers[0])) + "s";
  } else {
    for (std::size_t i = 0; i < containers.size(); ++i) {
      if (i) base += '-';
      base += to_string(containers[i]);
    }
  }
  return base + (xfer_allowed ? "+xfer" : "-xfer");
}

MachineConfig MachineConfig::parse(std::string_view machine, bool xfer_allowed) {
  using K = ContainerKind;
  struct Named {
    std::string_view name;
    std::vector<K> kinds;
  };
  const Named table[] = {
      {"stack", {K::stack}},
      {"queue", {K::queue}},
      {"deque", {K::deque}},
      {"two-stacks", {K::stack, K::stack}},
      {"two-queues", {K::queue, K::queue}},
      {"two-deques", {K::deque, K::deque}},
      {"stack-queue", {K::stack, K::queue}},
      {"stack-deque", {K::stack, K::deque}},
      {"queue-deque", {K::queue, K::deque}},
  };
  for (const auto& entry : table) {
    if (entry.name == machine) return MachineConfig{entry.kinds, xfer_allowed};
  }
  throw std::invalid_argument("unknown machine \"" + std::string(machine) + "\"");
}

namespace {

class ObtainabilitySearch {
 public:
  ObtainabilitySearch(const MachineConfig& config, const Permutation& target,
                      SearchOptions options)
      : config_(config), target_(target), options_(options), n_(target.size()),
        stores_(config.containers.size()) {}

  bool run() { return dfs(1, 0); }

 private:
  std::string key(int next_in) const {
    std::vector<std::string> parts;
    parts.reserve(stores_.size());
    for (std::size_t c = 0; c < stores_.size(); ++c) {
      std::string s(stores_[c].begin(), stores_[c].end());
      if (options_.canonicalize && config_.containers[c] == ContainerKind::deque) {
        std::string r(s.rbegin(), s.rend());
        s = std::min(s, r);
      }
      parts.push_back(std::move(s));
    }
    if (options_.canonicalize && parts.size() == 2 &&
        config_.containers[0] == config_.containers[1] && parts[1] < parts[0]) {
      std::swap(parts[0], parts[1]);
    }
    std::string k(1, static_cast<char>(next_in));
    for (const auto& part : parts) {
      k += static_cast<char>(0x7f);
      k += part;
    }
    return k;
  }

  bool dfs(int next_in, int k) {
    if (k == n_) return true;
    std::string memo_key;
    if (options_.memoize) {
      memo_key = key(next_in);
      if (failed_.contains(memo_key)) return false;
    }
    const char need = static_cast<char>(target_[k]);

    if (config_.xfer_allowed && next_in == need && dfs(next_in + 1, k + 1)) return true;

    for (std::size_t c = 0; c < stores_.size(); ++c) {
      auto& s = stores_[c];
      if (s.empty()) continue;
      const auto kind = config_.containers[c];
      const bool back_exit = kind != ContainerKind::queue;
      const bool front_exit = kind != ContainerKind::stack;
      if (back_exit && s.back() == need) {
        s.pop_back();
        const bool ok = dfs(next_in, k + 1);
        s.push_back(need);
        if (ok) return true;
      }
      if (front_exit && s.front() == need && !(back_exit && s.size() == 1)) {
        s.erase(s.begin());
        const bool ok = dfs(next_in, k + 1);
        s.insert(s.begin(), need);
        if (ok) return true;
      }
    }

    // A needed value already stored but not at an exit can never leave:
    // nothing else may be output before it.
    if (need >= next_in) {
      const char front = static_cast<char>(next_in);
      for (std::size_t c = 0; c < stores_.size(); ++c) {
        auto& s = stores_[c];
        s.push_back(front);
        bool ok = dfs(next_in + 1, k);
        s.pop_back();
        if (ok) return true;
        if (config_.containers[c] == ContainerKind::deque && !s.empty()) {
          s.insert(s.begin(), front);
          ok = dfs(next_in + 1, k);
          s.erase(s.begin());
          if (ok) return true;
        }
      }
    }

    if (options_.memoize) failed_.insert(std::move(memo_key));
    return false;
  }

  const MachineConfig& config_;
  const Permutation& target_;
  SearchOptions options_;
  int n_;
  std::vector<std::string> stores_;  // one char per stored value
  std::unordered_set<std::string> failed_;
};

template <class Counter>
CountTable timed_count(const MachineConfig& config, int n, Counter counter) {
  config.validate();
  if (n < 0 || n > kMaxCount) {
    throw std::out_of_range("count_obtainable supports 0 <= n <= " +
                            std::to_string(kMaxCount));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t count = counter(n, [&](const Permutation& p) {
    return obtainable(config, p);
  });
  CountTable table{n, config, BigInt(count),
                   std::chrono::steady_clock::now() - start};
  detail::logger()->info("count {} n={} -> {} in {:.1f} ms", config.name(), n, count,
               table.elapsed.count());
  return table;
}

}  // namespace

bool obtainable(const MachineConfig& config, const Permutation& p, SearchOptions options) {
  config.validate();
  if (p.size() > kMaxObtainable) {
    throw std::out_of_range("obtainable supports n <= " + std::to_string(kMaxObtainable));
  }
  return ObtainabilitySearch(config, p, options).run();
}

CountTable count_obtainable(const MachineConfig& config, int n) {
  return timed_count(config, n, [](int m, const PermutationPredicate& pred) {
    return count_permutations_if(m, pred);
  });
}

CountTable count_obtainable_serial(const MachineConfig& config, int n) {
  return timed_count(config, n, [](int m, const PermutationPredicate& pred) {
    return count_permutations_if_serial(m, pred);
  });
}

}  // namespace permdek
