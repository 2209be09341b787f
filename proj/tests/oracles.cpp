#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace permdek::oracle {

bool has_312(const Permutation& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (p[j] < p[k] && p[k] < p[i]) return true;
  return false;
}

bool has_321(const Permutation& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (p[i] > p[j] && p[j] > p[k]) return true;
  return false;
}

int longest_decreasing(const Permutation& p) {
  const int n = p.size();
  std::vector<int> best(static_cast<std::size_t>(n), 1);
  int overall = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (p[i] > p[j]) {
        best[static_cast<std::size_t>(j)] =
            std::max(best[static_cast<std::size_t>(j)], best[static_cast<std::size_t>(i)] + 1);
      }
    }
    overall = std::max(overall, best[static_cast<std::size_t>(j)]);
  }
  return overall;
}

BigInt catalan_by_recurrence(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

std::uint64_t dyck_words_by_filter(int n) {
  std::uint64_t count = 0;
  const std::uint64_t words = std::uint64_t{1} << (2 * n);
  for (std::uint64_t w = 0; w < words; ++w) {
    int h = 0;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      h += (w >> i) & 1U ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0) ++count;
  }
  return count;
}

TraceStats all_traces(const Permutation& p, Discipline d) {
  const int n = p.size();
  TraceStats stats;
  std::vector<int> store;
  std::vector<int> entered(static_cast<std::size_t>(n) + 1, 0);

  std::function<void(int, int, int, long long)> go = [&](int next_in, int k, int ops,
                                                         long long cost) {
    if (k == n) {
      ++stats.traces;
      if (stats.min_ops < 0 || ops < stats.min_ops) stats.min_ops = ops;
      if (stats.min_storage < 0 || cost < stats.min_storage) stats.min_storage = cost;
      return;
    }
    const int need = p[k];
    if (next_in <= n && next_in == need) go(next_in + 1, k + 1, ops + 1, cost);
    if (!store.empty()) {
      const int exit = d == Discipline::stack ? store.back() : store.front();
      if (exit == need) {
        if (d == Discipline::stack) {
          store.pop_back();
        } else {
          store.erase(store.begin());
        }
        go(next_in, k + 1, ops + 1, cost + ops - entered[static_cast<std::size_t>(need)]);
        if (d == Discipline::stack) {
          store.push_back(need);
        } else {
          store.insert(store.begin(), need);
        }
      }
    }
    if (next_in <= n) {
      store.push_back(next_in);
      entered[static_cast<std::size_t>(next_in)] = ops;
      go(next_in + 1, k, ops + 1, cost);
      store.pop_back();
    }
  };
  go(1, 0, 0, 0);
  return stats;
}

bool dek_winnable_exhaustive(const Permutation& shuffle, bool single_end) {
  const int n = shuffle.size();
  std::vector<int> line;
  std::function<bool(int, int)> go = [&](int dealt, int need) -> bool {
    if (need == n + 1) return true;
    if (dealt < n && shuffle[dealt] == need && go(dealt + 1, need + 1)) return true;
    if (!line.empty() && line.front() == need) {
      line.erase(line.begin());
      const bool ok = go(dealt, need + 1);
      line.insert(line.begin(), need);
      if (ok) return true;
    }
    if (!single_end && !line.empty() && line.back() == need) {
      line.pop_back();
      const bool ok = go(dealt, need + 1);
      line.push_back(need);
      if (ok) return true;
    }
    if (dealt < n) {
      line.insert(line.begin(), shuffle[dealt]);
      bool ok = go(dealt + 1, need);
      line.erase(line.begin());
      if (ok) return true;
      if (!single_end) {
        line.push_back(shuffle[dealt]);
        ok = go(dealt + 1, need);
        line.pop_back();
        if (ok) return true;
      }
    }
    return false;
  };
  return go(0, 1);
}

std::uint64_t dek_policy_wins(int n) {
  if (n == 0) return 1;
  // Node = (deque, next needed, cards drawn so far, whether the last drawn
  // card is still in hand). Value = number of consistent shuffles won.
  using Key = std::tuple<std::vector<int>, int, std::vector<int>, bool>;
  std::map<Key, std::uint64_t> memo;

  std::function<std::uint64_t(const std::vector<int>&, int, const std::vector<int>&, bool)>
      wins = [&](const std::vector<int>& line, int need, const std::vector<int>& drawn,
                 bool in_hand) -> std::uint64_t {
    const int undrawn = n - static_cast<int>(drawn.size());
    if (need == n + 1) return factorial(undrawn);
    Key key{line, need, drawn, in_hand};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::uint64_t best = 0;
    if (!line.empty() && line.front() == need) {
      best = std::max(best, wins({line.begin() + 1, line.end()}, need + 1, drawn, in_hand));
    }
    if (!line.empty() && line.back() == need) {
      best = std::max(best, wins({line.begin(), line.end() - 1}, need + 1, drawn, in_hand));
    }
    if (in_hand) {
      const int card = drawn.back();
      auto after = [&](const std::vector<int>& next_line, int next_need) {
        if (undrawn == 0) return wins(next_line, next_need, drawn, false);
        std::uint64_t total = 0;
        for (int c = 1; c <= n; ++c) {
          if (std::find(drawn.begin(), drawn.end(), c) != drawn.end()) continue;
          auto more = drawn;
          more.push_back(c);
          total += wins(next_line, next_need, more, true);
        }
        return total;
      };
      if (card == need) best = std::max(best, after(line, need + 1));
      std::vector<int> left{card};
      left.insert(left.end(), line.begin(), line.end());
      best = std::max(best, after(left, need));
      std::vector<int> right = line;
      right.push_back(card);
      best = std::max(best, after(right, need));
    }
    memo.emplace(std::move(key), best);
    return best;
  };

  std::uint64_t total = 0;
  for (int c = 1; c <= n; ++c) total += wins({}, 1, {c}, true);
  return total;
}

}  // namespace permdek::oracle
