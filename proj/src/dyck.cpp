#include "permdek/dyck.hpp"

#include <deque>

#include "permdek/machines.hpp"

namespace permdek {

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  return binomial(2 * n + 1, n + 1) / (2 * n + 1);
}

BallotSequence::BallotSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  if (terms_.size() % 2 == 0) {
    throw std::invalid_argument("ballot sequence must have odd length 2n+1");
  }
  long sum = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] != 1 && terms_[i] != -1) {
      throw std::invalid_argument("ballot term " + std::to_string(i) +
                                  " is neither +1 nor -1");
    }
    sum += terms_[i];
  }
  if (sum != 1) {
    throw std::invalid_argument("ballot sequence needs n+1 (+1)s and n (-1)s");
  }
}

std::size_t cycle_lemma_rotation(const BallotSequence& b) {
  const auto t = b.terms();
  const std::size_t len = t.size();
  std::size_t found = len;
  for (std::size_t start = 0; start < len; ++start) {
    long sum = 0;
    bool positive = true;
    for (std::size_t i = 0; i < len && positive; ++i) {
      sum += t[(start + i) % len];
      positive = sum > 0;
    }
    if (positive) {
      if (found != len) throw std::logic_error("cycle lemma: rotation not unique");
      found = start;
    }
  }
  if (found == len) throw std::logic_error("cycle lemma: no positive rotation");
  return found;
}

LatticePath cycle_lemma_canonical(const BallotSequence& b) {
  const auto t = b.terms();
  const std::size_t start = cycle_lemma_rotation(b);
  std::vector<Step> steps;
  steps.reserve(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) {
    steps.push_back(t[(start + i) % t.size()] > 0 ? Step::up : Step::down);
  }
  return LatticePath(std::move(steps));
}

namespace {

void extend(std::vector<Step>& prefix, int ups_left, int height,
            const std::function<void(const LatticePath&)>& visit) {
  if (ups_left == 0 && height == 0) {
    visit(LatticePath(prefix));
    return;
  }
  if (ups_left > 0) {
    prefix.push_back(Step::up);
    extend(prefix, ups_left - 1, height + 1, visit);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back(Step::down);
    extend(prefix, ups_left, height - 1, visit);
    prefix.pop_back();
  }
}

enum class Discipline { lifo, fifo };

Permutation decode(const LatticePath& path, Discipline discipline) {
  if (!path.is_peakless_weak_dyck()) {
    throw PathError("expected a peakless weak Dyck path, got " +
                    std::string(to_string(path.path_class())) + " path \"" +
                    path.word() + "\"");
  }
  std::deque<int> store;
  std::vector<int> out;
  int next_in = 1;
  for (Step s : path.steps()) {
    switch (s) {
      case Step::up: store.push_back(next_in++); break;
      case Step::flat: out.push_back(next_in++); break;
      case Step::down:
        if (discipline == Discipline::lifo) {
          out.push_back(store.back());
          store.pop_back();
        } else {
          out.push_back(store.front());
          store.pop_front();
        }
        break;
    }
  }
  return trusted_permutation(std::move(out));
}

}  // namespace

void for_each_dyck_path(int n, const std::function<void(const LatticePath&)>& visit) {
  if (n < 0 || n > kMaxDyckEnumeration) {
    throw std::out_of_range("dyck path enumeration supports 0 <= n <= " +
                            std::to_string(kMaxDyckEnumeration));
  }
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(2 * n));
  extend(prefix, n, 0, visit);
}

std::vector<LatticePath> dyck_paths(int n) {
  std::vector<LatticePath> out;
  for_each_dyck_path(n, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

Permutation decode_stackable(const LatticePath& path) {
  return decode(path, Discipline::lifo);
}

Permutation decode_queueable(const LatticePath& path) {
  return decode(path, Discipline::fifo);
}

Permutation knuth_richards(const Permutation& p) {
  auto r = realize_with_stack(p, true);
  if (!r) {
    throw ClassError("not stackable: contains 312 at " + r.blocker->to_string(),
                     *r.blocker);
  }
  return decode_queueable(trace_height_profile(*r.trace));
}

Permutation knuth_richards_inv(const Permutation& p) {
  auto r = realize_with_queue(p);
  if (!r) {
    throw ClassError("not queueable: contains 321 at " + r.blocker->to_string(),
                     *r.blocker);
  }
  return decode_stackable(trace_height_profile(*r.trace));
}

Permutation stackit(const Permutation& sigma) {
  return decode_stackable(trace_height_profile(realize_with_set(sigma)));
}

Permutation queueit(const Permutation& sigma) {
  return decode_queueable(trace_height_profile(realize_with_set(sigma)));
}

}  // namespace permdek
