#pragma once

// Permutations in one-line notation and the pattern predicates that every
// other module is cross-checked against.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permdek {

/// Raised when a sequence is not a bijection on 1..n. `index()` is the
/// 0-based position of the offending entry, or -1 when no single entry is
/// to blame.
class PermutationError : public std::invalid_argument {
 public:
  PermutationError(const std::string& what, std::ptrdiff_t index)
      : std::invalid_argument(what), index_(index) {}

  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  std::ptrdiff_t index_;
};

/// A permutation p_1 ... p_n of {1..n}. Always valid once constructed.
/// Indexing through operator[] is 0-based; positions reported by the
/// predicates below are 1-based, matching one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(int n);

  /// Parses "2,1,5,7,6,4,3". Whitespace is ignored; "" is the empty
  /// permutation.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const noexcept { return entries_; }
  const std::vector<int>& vector() const noexcept { return entries_; }

  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<int> entries) : entries_(std::move(entries)) {}
  friend Permutation trusted_permutation(std::vector<int>);

  std::vector<int> entries_;
};

/// Skips validation. Only for callers that construct bijections by design
/// (unranking, replaying a legal trace).
Permutation trusted_permutation(std::vector<int> entries);

/// Checks that `seq` is a bijection on 1..len(seq).
Permutation validate_permutation(std::span<const long long> seq);

/// An occurrence of a length-3 pattern: 1-based positions in increasing
/// order and the values found there.
struct PatternWitness {
  std::array<int, 3> positions{};
  std::array<int, 3> values{};

  std::string to_string() const;
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

inline constexpr int kMaxPatternLength = 4;

/// Positions (1-based) of the lexicographically first occurrence of
/// `pattern` in `p`, or nullopt. Naive O(n^k) scan, k <= 4.
std::optional<std::vector<int>> find_pattern(const Permutation& p,
                                             const Permutation& pattern);
bool contains_pattern(const Permutation& p, const Permutation& pattern);

bool avoids_312(const Permutation& p);
bool avoids_321(const Permutation& p);

/// First 312 (resp. 321) occurrence, if any.
std::optional<PatternWitness> witness_312(const Permutation& p);
std::optional<PatternWitness> witness_321(const Permutation& p);

/// 1-based positions of the left-to-right maxima.
std::vector<int> record_setters(const Permutation& p);

struct Entry {
  int position;  // 1-based
  int value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Left-to-right maxima and the complementary subsequence.
struct Decomposition {
  std::vector<Entry> records;
  std::vector<Entry> rest;
};

/// Present iff `rest` is increasing, which happens iff p avoids 321.
std::optional<Decomposition> two_increasing_decomposition(const Permutation& p);

}  // namespace permdek
