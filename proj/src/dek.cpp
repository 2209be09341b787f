#include "permdek/dek.hpp"

#include <algorithm>
#include <unordered_set>

#include "permdek/enumerate.hpp"

namespace permdek {

std::string_view to_string(DekMove m) {
  switch (m) {
    case DekMove::play_deck: return "PLAY_DECK";
    case DekMove::play_left: return "PLAY_LEFT";
    case DekMove::play_right: return "PLAY_RIGHT";
    case DekMove::to_left: return "TO_LEFT";
    case DekMove::to_right: return "TO_RIGHT";
  }
  return "?";
}

std::optional<DekMove> parse_dek_move(std::string_view s) {
  for (DekMove m : kAllDekMoves) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

namespace {

// Cards 1..n must each appear exactly once across the given groups, with
// the pile being 1..next_needed-1.
void check_partition(int n, int next_needed, const std::vector<int>& first,
                     const std::vector<int>& second, const char* first_name,
                     const char* second_name) {
  if (n < 0) throw DekError("invariant violated: n must be nonnegative");
  if (next_needed < 1 || next_needed > n + 1) {
    throw DekError("invariant violated: pile_next must lie in 1..n+1");
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int c = 1; c < next_needed; ++c) seen[static_cast<std::size_t>(c)] = 1;
  auto mark = [&](const std::vector<int>& group, const char* name) {
    for (int c : group) {
      if (c < 1 || c > n) {
        throw DekError(std::string("invariant violated: card ") + std::to_string(c) +
                       " in " + name + " is outside 1..n");
      }
      if (seen[static_cast<std::size_t>(c)]) {
        throw DekError(std::string("invariant violated: deck, deque and pile must "
                                   "partition 1..n (card ") +
                       std::to_string(c) + " in " + name + " appears twice or is "
                       "already on the pile)");
      }
      seen[static_cast<std::size_t>(c)] = 1;
    }
  };
  mark(first, first_name);
  mark(second, second_name);
}

}  // namespace

void DekState::validate() const {
  check_partition(n, next_needed, deck, deque, "deck", "deque");
  if (deck.size() + deque.size() + static_cast<std::size_t>(next_needed - 1) !=
      static_cast<std::size_t>(n)) {
    throw DekError("invariant violated: deck, deque and pile must partition 1..n "
                   "(cards are missing)");
  }
}

bool DekState::lost() const { return !won() && legal_moves(*this).empty(); }

DekState new_game(const Permutation& shuffle) {
  return DekState{shuffle.vector(), {}, 1, shuffle.size()};
}

std::vector<DekMove> legal_moves(const DekState& s) {
  if (s.won()) throw DekError("the game is already won");
  std::vector<DekMove> moves;
  const bool has_deck = !s.deck.empty();
  if (has_deck && s.deck.front() == s.next_needed) moves.push_back(DekMove::play_deck);
  if (!s.deque.empty() && s.deque.front() == s.next_needed) {
    moves.push_back(DekMove::play_left);
  }
  if (!s.deque.empty() && s.deque.back() == s.next_needed) {
    moves.push_back(DekMove::play_right);
  }
  if (has_deck) {
    moves.push_back(DekMove::to_left);
    moves.push_back(DekMove::to_right);
  }
  return moves;
}

DekState apply_move(const DekState& s, DekMove m) {
  const std::string name(to_string(m));
  if (s.won()) throw DekError(name + ": the game is already won");
  DekState t = s;
  const auto need = std::to_string(s.next_needed);
  switch (m) {
    case DekMove::play_deck:
      if (s.deck.empty()) throw DekError(name + ": the deck is empty");
      if (s.deck.front() != s.next_needed) {
        throw DekError(name + ": deck top is " + std::to_string(s.deck.front()) +
                       " but the pile needs " + need);
      }
      t.deck.erase(t.deck.begin());
      ++t.next_needed;
      break;
    case DekMove::play_left:
    case DekMove::play_right: {
      const bool left = m == DekMove::play_left;
      if (s.deque.empty()) throw DekError(name + ": the deque is empty");
      const int card = left ? s.deque.front() : s.deque.back();
      if (card != s.next_needed) {
        throw DekError(name + ": " + (left ? "left" : "right") + " end is " +
                       std::to_string(card) + " but the pile needs " + need);
      }
      if (left) {
        t.deque.erase(t.deque.begin());
      } else {
        t.deque.pop_back();
      }
      ++t.next_needed;
      break;
    }
    case DekMove::to_left:
    case DekMove::to_right:
      if (s.deck.empty()) throw DekError(name + ": the deck is empty");
      if (m == DekMove::to_left) {
        t.deque.insert(t.deque.begin(), s.deck.front());
      } else {
        t.deque.push_back(s.deck.front());
      }
      t.deck.erase(t.deck.begin());
      break;
  }
  return t;
}

void DekView::validate() const {
  if (deck_size < 0) throw DekError("invariant violated: deck size must be nonnegative");
  if (top.has_value() != (deck_size > 0)) {
    throw DekError("invariant violated: the drawn card is present iff the deck is nonempty");
  }
  std::vector<int> drawn;
  if (top) drawn.push_back(*top);
  check_partition(n, next_needed, drawn, deque, "top", "deque");
  if (deque.size() + static_cast<std::size_t>(deck_size + next_needed - 1) !=
      static_cast<std::size_t>(n)) {
    throw DekError("invariant violated: deck, deque and pile must partition 1..n "
                   "(card counts do not add up)");
  }
}

DekView visible(const DekState& s) {
  DekView v{s.deque, s.next_needed, s.n, static_cast<int>(s.deck.size()), std::nullopt};
  if (!s.deck.empty()) v.top = s.deck.front();
  return v;
}

std::vector<DekMove> legal_moves(const DekView& v) {
  if (v.next_needed == v.n + 1) throw DekError("the game is already won");
  std::vector<DekMove> moves;
  if (v.top && *v.top == v.next_needed) moves.push_back(DekMove::play_deck);
  if (!v.deque.empty() && v.deque.front() == v.next_needed) {
    moves.push_back(DekMove::play_left);
  }
  if (!v.deque.empty() && v.deque.back() == v.next_needed) {
    moves.push_back(DekMove::play_right);
  }
  if (v.deck_size > 0) {
    moves.push_back(DekMove::to_left);
    moves.push_back(DekMove::to_right);
  }
  return moves;
}

namespace {

// Depth-first search over positions reachable from a fixed deck order. A
// position is (cards dealt, deque); the pile follows from those. Memo
// holds positions already proven lost.
class ClairvoyantSearch {
 public:
  ClairvoyantSearch(const DekState& start, SolverOptions options)
      : deck_(start.deck), options_(options), n_(start.n) {
    deque_.assign(start.deque.begin(), start.deque.end());
  }

  ClairvoyantResult run(int next_needed) {
    ClairvoyantResult r;
    r.winnable = dfs(0, next_needed, r.witness);
    if (!r.winnable) r.witness.clear();
    return r;
  }

 private:
  std::string key(std::size_t dealt) const {
    std::string k(1, static_cast<char>(dealt));
    if (options_.canonicalize && !options_.single_end) {
      std::string r(deque_.rbegin(), deque_.rend());
      k += std::min(deque_, r);
    } else {
      k += deque_;
    }
    return k;
  }

  bool dfs(std::size_t dealt, int need, std::vector<DekMove>& line) {
    if (need == n_ + 1) return true;
    std::string memo_key = key(dealt);
    if (lost_.contains(memo_key)) return false;

    auto attempt = [&](DekMove m, std::size_t next_dealt, int next_need) {
      line.push_back(m);
      if (dfs(next_dealt, next_need, line)) return true;
      line.pop_back();
      return false;
    };

    const bool has_deck = dealt < deck_.size();
    const char wanted = static_cast<char>(need);
    if (has_deck && deck_[dealt] == need && attempt(DekMove::play_deck, dealt + 1, need + 1)) {
      return true;
    }
    if (!deque_.empty() && deque_.front() == wanted) {
      deque_.erase(deque_.begin());
      const bool ok = attempt(DekMove::play_left, dealt, need + 1);
      deque_.insert(deque_.begin(), wanted);
      if (ok) return true;
    }
    if (!options_.single_end && !deque_.empty() && deque_.back() == wanted) {
      deque_.pop_back();
      const bool ok = attempt(DekMove::play_right, dealt, need + 1);
      deque_.push_back(wanted);
      if (ok) return true;
    }
    if (has_deck) {
      const char card = static_cast<char>(deck_[dealt]);
      deque_.insert(deque_.begin(), card);
      bool ok = attempt(DekMove::to_left, dealt + 1, need);
      deque_.erase(deque_.begin());
      if (ok) return true;
      if (!options_.single_end) {
        deque_.push_back(card);
        ok = attempt(DekMove::to_right, dealt + 1, need);
        deque_.pop_back();
        if (ok) return true;
      }
    }
    lost_.insert(std::move(memo_key));
    return false;
  }

  const std::vector<int>& deck_;
  SolverOptions options_;
  int n_;
  std::string deque_;  // one char per card, left to right
  std::unordered_set<std::string> lost_;
};

void check_guard(int n, int limit, const char* what) {
  if (n < 0 || n > limit) {
    throw std::out_of_range(std::string(what) + " supports 0 <= n <= " +
                            std::to_string(limit) + ", got " + std::to_string(n));
  }
}

}  // namespace

ClairvoyantResult clairvoyant_winnable(const DekState& s, SolverOptions options) {
  s.validate();
  if (s.n > 120) throw std::out_of_range("clairvoyant search supports n <= 120");
  return ClairvoyantSearch(s, options).run(s.next_needed);
}

ClairvoyantResult clairvoyant_winnable(const Permutation& shuffle, SolverOptions options) {
  check_guard(shuffle.size(), kMaxClairvoyant, "clairvoyant_winnable");
  return clairvoyant_winnable(new_game(shuffle), options);
}

std::uint64_t count_winnable(int n, SolverOptions options) {
  check_guard(n, kMaxClairvoyant, "count_winnable");
  return count_permutations_if(n, [options](const Permutation& p) {
    return clairvoyant_winnable(p, options).winnable;
  });
}

std::uint64_t count_winnable_serial(int n, SolverOptions options) {
  check_guard(n, kMaxClairvoyant, "count_winnable");
  return count_permutations_if_serial(n, [options](const Permutation& p) {
    return clairvoyant_winnable(p, options).winnable;
  });
}

WinValue win_probability_clairvoyant(int n) {
  check_guard(n, kMaxWinProbability, "win_probability_clairvoyant");
  return WinValue(BigInt(count_winnable(n)), BigInt(factorial(n)));
}

WinValue win_probability_clairvoyant_serial(int n) {
  check_guard(n, kMaxWinProbability, "win_probability_clairvoyant");
  return WinValue(BigInt(count_winnable_serial(n)), BigInt(factorial(n)));
}

WinValue optimal_policy_value(int n) {
  check_guard(n, kMaxPolicyValue, "optimal_policy_value");
  return WinValue(PolicySolver().opening_value(n));
}

Hint hint(const DekState& s, HintMode mode) {
  s.validate();
  if (mode == HintMode::policy) return hint(visible(s));
  if (s.won()) throw GameOverError("the game is already won");
  const auto moves = legal_moves(s);
  if (moves.empty()) throw GameOverError("no legal moves: the game is lost");
  for (DekMove m : moves) {
    const auto next = apply_move(s, m);
    if (clairvoyant_winnable(next).winnable) return Hint{m, WinValue::one()};
  }
  return Hint{moves.front(), WinValue::zero()};
}

}  // namespace permdek
