#include <algorithm>
#include <unordered_map>

#include "permdek/dek.hpp"

namespace permdek {

struct PolicySolver::Memo {
  std::unordered_map<std::string, Rational> values;
};

PolicySolver::PolicySolver() : memo_(std::make_unique<Memo>()) {}
PolicySolver::~PolicySolver() = default;
PolicySolver::PolicySolver(PolicySolver&&) noexcept = default;
PolicySolver& PolicySolver::operator=(PolicySolver&&) noexcept = default;

std::size_t PolicySolver::memo_size() const noexcept { return memo_->values.size(); }

namespace {

// The unseen cards are everything not on the pile, in the deque or drawn.
// Mirror-image deques have equal value.
std::string view_key(const DekView& v) {
  std::string line(v.deque.begin(), v.deque.end());
  std::string mirror(line.rbegin(), line.rend());
  std::string k;
  k += static_cast<char>(v.n);
  k += static_cast<char>(v.next_needed);
  k += static_cast<char>(v.top.value_or(0));
  k += std::min(line, mirror);
  return k;
}

std::vector<int> unseen_cards(const DekView& v) {
  std::vector<char> known(static_cast<std::size_t>(v.n) + 1, 0);
  for (int c = 1; c < v.next_needed; ++c) known[static_cast<std::size_t>(c)] = 1;
  for (int c : v.deque) known[static_cast<std::size_t>(c)] = 1;
  if (v.top) known[static_cast<std::size_t>(*v.top)] = 1;
  std::vector<int> out;
  for (int c = 1; c <= v.n; ++c) {
    if (!known[static_cast<std::size_t>(c)]) out.push_back(c);
  }
  return out;
}

}  // namespace

Rational PolicySolver::value(const DekView& v) {
  if (v.next_needed == v.n + 1) return Rational(1);
  const std::string key = view_key(v);
  if (auto it = memo_->values.find(key); it != memo_->values.end()) return it->second;
  Rational best(0);
  for (DekMove m : legal_moves(v)) {
    best = std::max(best, move_value(v, m));
    if (best == 1) break;
  }
  memo_->values.emplace(key, best);
  return best;
}

Rational PolicySolver::move_value(const DekView& v, DekMove m) {
  DekView next = v;
  switch (m) {
    case DekMove::play_left:
      if (v.deque.empty() || v.deque.front() != v.next_needed) {
        throw DekError("PLAY_LEFT: left end is not the next needed card");
      }
      next.deque.erase(next.deque.begin());
      ++next.next_needed;
      return value(next);
    case DekMove::play_right:
      if (v.deque.empty() || v.deque.back() != v.next_needed) {
        throw DekError("PLAY_RIGHT: right end is not the next needed card");
      }
      next.deque.pop_back();
      ++next.next_needed;
      return value(next);
    case DekMove::play_deck:
    case DekMove::to_left:
    case DekMove::to_right:
      break;
  }
  if (!v.top) throw DekError(std::string(to_string(m)) + ": the deck is empty");
  const int card = *v.top;
  if (m == DekMove::play_deck) {
    if (card != v.next_needed) {
      throw DekError("PLAY_DECK: deck top is not the next needed card");
    }
    ++next.next_needed;
  } else if (m == DekMove::to_left) {
    next.deque.insert(next.deque.begin(), card);
  } else {
    next.deque.push_back(card);
  }
  --next.deck_size;
  next.top.reset();
  if (next.deck_size == 0) return value(next);

  // The next card drawn is uniform over the unseen ones.
  const auto unseen = unseen_cards(next);
  Rational total(0);
  for (int c : unseen) {
    next.top = c;
    total += value(next);
  }
  return total / static_cast<long>(unseen.size());
}

Rational PolicySolver::opening_value(int n) {
  if (n < 0) throw std::out_of_range("opening_value: n must be nonnegative");
  if (n == 0) return Rational(1);
  Rational total(0);
  for (int c = 1; c <= n; ++c) {
    total += value(DekView{{}, 1, n, n, c});
  }
  return total / n;
}

Hint hint(const DekView& v) {
  v.validate();
  if (v.next_needed == v.n + 1) throw GameOverError("the game is already won");
  const auto moves = legal_moves(v);
  if (moves.empty()) throw GameOverError("no legal moves: the game is lost");
  PolicySolver solver;
  std::optional<Hint> best;
  for (DekMove m : moves) {
    WinValue value(solver.move_value(v, m));
    if (!best || best->value < value) best = Hint{m, std::move(value)};
  }
  return *best;
}

}  // namespace permdek
