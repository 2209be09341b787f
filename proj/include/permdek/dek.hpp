#pragma once

// Double-Ended Knuth solitaire. The deck is a face-down permutation (front
// = top); the deque is a face-up line whose two ends are both playable; the
// pile is built up from 1. A card may go to the pile when it is the next
// one needed and sits on top of the deck or at a deque end; otherwise the
// top card of the deck may be moved to either end of the deque.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permdek/numeric.hpp"
#include "permdek/perm.hpp"

namespace permdek {

/// Declaration order is the tie-break order used by hints.
enum class DekMove { play_deck, play_left, play_right, to_left, to_right };

inline constexpr DekMove kAllDekMoves[] = {DekMove::play_deck, DekMove::play_left,
                                           DekMove::play_right, DekMove::to_left,
                                           DekMove::to_right};

/// "PLAY_DECK", "PLAY_LEFT", ...
std::string_view to_string(DekMove m);
std::optional<DekMove> parse_dek_move(std::string_view s);

/// A rule or invariant violation. what() names it.
class DekError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by hint() when the position has no legal move.
class GameOverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DekState {
  std::vector<int> deck;   // top first
  std::vector<int> deque;  // left to right
  int next_needed = 1;
  int n = 0;

  bool won() const noexcept { return next_needed == n + 1; }
  /// Not won and no legal move.
  bool lost() const;

  /// Throws DekError naming the first broken invariant.
  void validate() const;

  friend bool operator==(const DekState&, const DekState&) = default;
};

DekState new_game(const Permutation& shuffle);

/// Throws DekError on a won state.
std::vector<DekMove> legal_moves(const DekState& s);

/// Throws DekError with the reason when `m` is illegal in `s`.
DekState apply_move(const DekState& s, DekMove m);

/// What a player who cannot see the face-down deck knows: the deque, the
/// pile, how many cards remain and the card just drawn from the deck.
struct DekView {
  std::vector<int> deque;
  int next_needed = 1;
  int n = 0;
  int deck_size = 0;
  std::optional<int> top;  // present iff deck_size > 0

  void validate() const;
  friend bool operator==(const DekView&, const DekView&) = default;
};

DekView visible(const DekState& s);
std::vector<DekMove> legal_moves(const DekView& v);

struct SolverOptions {
  bool canonicalize = true;  // identify a deque with its mirror image
  bool single_end = false;   // only PLAY_DECK, PLAY_LEFT and TO_LEFT
};

inline constexpr int kMaxClairvoyant = 10;
inline constexpr int kMaxWinProbability = 8;
inline constexpr int kMaxPolicyValue = 6;

struct ClairvoyantResult {
  bool winnable = false;
  std::vector<DekMove> witness;  // a winning line when winnable
};

/// Full-information search from the opening position.
ClairvoyantResult clairvoyant_winnable(const Permutation& shuffle, SolverOptions options = {});

/// Same search from an arbitrary position (no size guard beyond the
/// state's own validity; callers bound n).
ClairvoyantResult clairvoyant_winnable(const DekState& s, SolverOptions options = {});

/// Number of winnable shuffles of size n.
std::uint64_t count_winnable(int n, SolverOptions options = {});
std::uint64_t count_winnable_serial(int n, SolverOptions options = {});

/// |winnable shuffles| / n!.
WinValue win_probability_clairvoyant(int n);
WinValue win_probability_clairvoyant_serial(int n);

/// Value of optimal play without seeing the face-down deck.
WinValue optimal_policy_value(int n);

/// Expectimax over what the player can see; the unseen cards are in
/// uniformly random order. Memo lives as long as the solver.
class PolicySolver {
 public:
  PolicySolver();
  ~PolicySolver();
  PolicySolver(PolicySolver&&) noexcept;
  PolicySolver& operator=(PolicySolver&&) noexcept;

  Rational value(const DekView& v);
  /// Expected value of making `m` now and playing optimally after.
  Rational move_value(const DekView& v, DekMove m);

  /// Value of a fresh game of size n before the first card is drawn.
  Rational opening_value(int n);

  std::size_t memo_size() const noexcept;

 private:
  struct Memo;
  std::unique_ptr<Memo> memo_;
};

enum class HintMode { clairvoyant, policy };

struct Hint {
  DekMove move;
  WinValue value;
};

/// A legal move of maximal value (ties broken in DekMove order). Throws
/// GameOverError when won or lost.
Hint hint(const DekState& s, HintMode mode);
Hint hint(const DekView& v);

}  // namespace permdek
