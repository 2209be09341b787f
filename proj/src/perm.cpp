#include "permdek/perm.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace permdek {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <class Int>
void check_bijection(std::span<const Int> seq) {
  const auto n = static_cast<long long>(seq.size());
  std::vector<std::ptrdiff_t> seen(seq.size() + 1, -1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const long long v = static_cast<long long>(seq[i]);
    if (v < 1 || v > n) {
      throw PermutationError("value " + std::to_string(v) + " at index " +
                                 std::to_string(i) + " is outside 1.." +
                                 std::to_string(n),
                             static_cast<std::ptrdiff_t>(i));
    }
    auto& slot = seen[static_cast<std::size_t>(v)];
    if (slot >= 0) {
      throw PermutationError("duplicate value " + std::to_string(v) +
                                 " at index " + std::to_string(i),
                             static_cast<std::ptrdiff_t>(i));
    }
    slot = static_cast<std::ptrdiff_t>(i);
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  check_bijection(std::span<const int>(entries_));
}

Permutation trusted_permutation(std::vector<int> entries) {
  return Permutation(Permutation::Trusted{}, std::move(entries));
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(e.begin(), e.end(), 1);
  return trusted_permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  if (trim(text).empty()) return {};
  std::vector<long long> values;
  std::size_t index = 0;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    long long v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw PermutationError("entry " + std::to_string(index) + " (\"" +
                                 std::string(token) + "\") is not an integer",
                             static_cast<std::ptrdiff_t>(index));
    }
    values.push_back(v);
    ++index;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return validate_permutation(values);
}

Permutation validate_permutation(std::span<const long long> seq) {
  check_bijection(seq);
  return trusted_permutation(std::vector<int>(seq.begin(), seq.end()));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i + 1);
  }
  return trusted_permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string PatternWitness::to_string() const {
  std::ostringstream os;
  os << "values (" << values[0] << ',' << values[1] << ',' << values[2]
     << ") at positions (" << positions[0] << ',' << positions[1] << ','
     << positions[2] << ')';
  return os.str();
}

std::optional<std::vector<int>> find_pattern(const Permutation& p,
                                             const Permutation& pattern) {
  const int k = pattern.size();
  if (k > kMaxPatternLength) {
    throw std::invalid_argument("pattern length " + std::to_string(k) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxPatternLength));
  }
  const int n = p.size();
  if (k == 0) return std::vector<int>{};
  if (k > n) return std::nullopt;

  // Odometer over increasing index tuples idx[0] < ... < idx[k-1].
  std::array<int, kMaxPatternLength> idx{};
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a) {
      for (int b = a + 1; b < k; ++b) {
        const bool lt_text = p[idx[static_cast<std::size_t>(a)]] < p[idx[static_cast<std::size_t>(b)]];
        const bool lt_pattern = pattern[a] < pattern[b];
        if (lt_text != lt_pattern) {
          match = false;
          break;
        }
      }
    }
    if (match) {
      std::vector<int> positions;
      for (int a = 0; a < k; ++a) positions.push_back(idx[static_cast<std::size_t>(a)] + 1);
      return positions;
    }
    int slot = k - 1;
    while (slot >= 0 && idx[static_cast<std::size_t>(slot)] == n - k + slot) --slot;
    if (slot < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(slot)];
    for (int s = slot + 1; s < k; ++s) {
      idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
    }
  }
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  return find_pattern(p, pattern).has_value();
}

// 312 at (i,j,k) iff some later p_k sits strictly between p_j and the
// largest value before j.
std::optional<PatternWitness> witness_312(const Permutation& p) {
  const int n = p.size();
  int prefix_max = 0;
  for (int j = 0; j < n; ++j) {
    if (prefix_max > p[j]) {
      for (int k = j + 1; k < n; ++k) {
        if (p[j] < p[k] && p[k] < prefix_max) {
          int i = 0;
          while (p[i] <= p[k]) ++i;
          return PatternWitness{{i + 1, j + 1, k + 1}, {p[i], p[j], p[k]}};
        }
      }
    }
    prefix_max = std::max(prefix_max, p[j]);
  }
  return std::nullopt;
}

// 321 centred at j iff prefix max before j > p_j > suffix min after j.
std::optional<PatternWitness> witness_321(const Permutation& p) {
  const int n = p.size();
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 1,
                              std::numeric_limits<int>::max());
  for (int j = n - 1; j >= 0; --j) {
    suffix_min[static_cast<std::size_t>(j)] =
        std::min(suffix_min[static_cast<std::size_t>(j) + 1], p[j]);
  }
  int prefix_max = 0;
  int argmax = -1;
  for (int j = 0; j < n; ++j) {
    const int after = suffix_min[static_cast<std::size_t>(j) + 1];
    if (prefix_max > p[j] && p[j] > after) {
      int k = j + 1;
      while (p[k] != after) ++k;
      return PatternWitness{{argmax + 1, j + 1, k + 1}, {prefix_max, p[j], after}};
    }
    if (p[j] > prefix_max) {
      prefix_max = p[j];
      argmax = j;
    }
  }
  return std::nullopt;
}

bool avoids_312(const Permutation& p) { return !witness_312(p).has_value(); }
bool avoids_321(const Permutation& p) { return !witness_321(p).has_value(); }

std::vector<int> record_setters(const Permutation& p) {
  std::vector<int> positions;
  int best = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > best) {
      best = p[i];
      positions.push_back(i + 1);
    }
  }
  return positions;
}

std::optional<Decomposition> two_increasing_decomposition(const Permutation& p) {
  Decomposition d;
  int best = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > best) {
      best = p[i];
      d.records.push_back({i + 1, p[i]});
    } else {
      if (!d.rest.empty() && d.rest.back().value > p[i]) return std::nullopt;
      d.rest.push_back({i + 1, p[i]});
    }
  }
  return d;
}

}  // namespace permdek
