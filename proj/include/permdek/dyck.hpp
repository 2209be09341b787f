#pragma once

// Catalan counting, the cycle lemma, Dyck path enumeration, and the codecs
// between peakless weak Dyck paths and stackable / queueable permutations.
// The stack-queue bijection and the stackit / queueit projections are
// compositions of those codecs with the canonical machine traces.

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "permdek/lattice_path.hpp"
#include "permdek/numeric.hpp"
#include "permdek/perm.hpp"

namespace permdek {

/// C_n = binomial(2n+1, n+1) / (2n+1), exact.
BigInt catalan(int n);

/// n+1 terms equal to +1 and n terms equal to -1.
class BallotSequence {
 public:
  explicit BallotSequence(std::vector<int> terms);

  std::span<const int> terms() const noexcept { return terms_; }
  int n() const noexcept { return static_cast<int>(terms_.size() / 2); }

 private:
  std::vector<int> terms_;
};

/// Start index of the unique rotation whose partial sums are all strictly
/// positive (equivalently, nonnegative once the leading +1 is dropped).
std::size_t cycle_lemma_rotation(const BallotSequence& b);

/// Rotate by cycle_lemma_rotation, drop the leading +1, read +1 as U and
/// -1 as D.
LatticePath cycle_lemma_canonical(const BallotSequence& b);

inline constexpr int kMaxDyckEnumeration = 14;

/// Visits every Dyck path of length 2n once, in lexicographic order with
/// U < D.
void for_each_dyck_path(int n, const std::function<void(const LatticePath&)>& visit);
std::vector<LatticePath> dyck_paths(int n);

/// Replays a peakless weak Dyck path as a stack trace (U push, H transfer,
/// D pop) and returns the output.
Permutation decode_stackable(const LatticePath& path);

/// Same replay with a queue (D dequeues the head).
Permutation decode_queueable(const LatticePath& path);

/// Raised when an input lies outside the class a map is defined on.
class ClassError : public std::domain_error {
 public:
  ClassError(const std::string& what, PatternWitness witness)
      : std::domain_error(what), witness_(witness) {}
  const PatternWitness& witness() const noexcept { return witness_; }

 private:
  PatternWitness witness_;
};

/// Stack-realizable p -> the queue-realizable permutation with the same
/// canonical height profile.
Permutation knuth_richards(const Permutation& p);
Permutation knuth_richards_inv(const Permutation& p);

/// Decode the lazy set profile of sigma as a stack / queue trace.
Permutation stackit(const Permutation& sigma);
Permutation queueit(const Permutation& sigma);

}  // namespace permdek
