#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "permdek/dyck.hpp"
#include "permdek/enumerate.hpp"
#include "permdek/machines.hpp"

namespace permdek {

namespace {

class Recorder {
 public:
  void expect(const std::string& name, bool ok, const std::string& detail) {
    auto [it, fresh] = index_.try_emplace(name, checks_.size());
    if (fresh) checks_.push_back(CheckResult{name, true, 0, {}});
    auto& check = checks_[it->second];
    ++check.cases;
    if (!ok && check.passed) {
      check.passed = false;
      check.counterexample = detail;
    }
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
  std::map<std::string, std::size_t> index_;
};

bool genuine_witness(const Permutation& p, const PatternWitness& w,
                     const Permutation& pattern) {
  for (int i = 0; i < 3; ++i) {
    const int pos = w.positions[static_cast<std::size_t>(i)];
    if (pos < 1 || pos > p.size()) return false;
    if (p[pos - 1] != w.values[static_cast<std::size_t>(i)]) return false;
    if (i > 0 && pos <= w.positions[static_cast<std::size_t>(i - 1)]) return false;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const int v = w.values[i];
    const auto rank = 1 + std::count_if(w.values.begin(), w.values.end(),
                                        [v](int u) { return u < v; });
    if (rank != pattern[static_cast<int>(i)]) return false;
  }
  return true;
}

bool replays_cleanly(const MachineTrace& t, bool canonical = true) {
  try {
    const auto again = replay(t.machine, t.ops, t.output.size());
    if (again.output != t.output || again.heights != t.heights) return false;
  } catch (const TraceError&) {
    return false;
  }
  // Canonical traces never pop a value right after pushing it.
  for (std::size_t i = 1; canonical && i < t.ops.size(); ++i) {
    if (t.ops[i - 1].kind == OpKind::move_in && t.ops[i].kind == OpKind::emit &&
        t.ops[i - 1].value == t.ops[i].value) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool BijectionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string BijectionReport::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " stackable=" << stackable << " queueable=" << queueable
     << " catalan=" << catalan(n) << '\n';
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) os << ": " << c.counterexample;
    os << '\n';
  }
  os << (passed() ? "all checks passed" : "FAILURES") << '\n';
  return os.str();
}

BijectionReport verify_bijection_suite(int n) {
  if (n < 0 || n > kMaxVerify) {
    throw std::out_of_range("verify supports 0 <= n <= " + std::to_string(kMaxVerify));
  }
  static const Permutation p312{3, 1, 2};
  static const Permutation p321{3, 2, 1};

  Recorder rec;
  BijectionReport report;
  report.n = n;
  std::set<Permutation> kr_images;
  std::set<Permutation> kr_inv_images;

  for_each_permutation(n, [&](const Permutation& p) {
    const std::string ps = "p=" + p.to_string();
    const bool s312 = avoids_312(p);
    const bool s321 = avoids_321(p);
    rec.expect("avoids_312 agrees with the pattern scan",
               s312 == !contains_pattern(p, p312), ps);
    rec.expect("avoids_321 agrees with the pattern scan",
               s321 == !contains_pattern(p, p321), ps);
    rec.expect("321-avoiders are exactly the two-increasing interleavings",
               s321 == two_increasing_decomposition(p).has_value(), ps);
    {
      const auto rs = record_setters(p);
      bool increasing = true;
      for (std::size_t i = 1; i < rs.size(); ++i) {
        increasing = increasing && p[rs[i] - 1] > p[rs[i - 1] - 1];
      }
      rec.expect("record setters increase", increasing, ps);
    }

    const auto push_pop = realize_with_stack(p, false);
    const auto stack = realize_with_stack(p, true);
    const auto queue = realize_with_queue(p);
    const auto set = realize_with_set(p);
    const auto set_profile = trace_height_profile(set);

    rec.expect("push/pop stack realizes exactly the 312-avoiders",
               static_cast<bool>(push_pop) == s312, ps);
    rec.expect("stack with transfers realizes exactly the 312-avoiders",
               static_cast<bool>(stack) == s312, ps);
    rec.expect("queue realizes exactly the 321-avoiders",
               static_cast<bool>(queue) == s321, ps);
    rec.expect("set traces replay to their output", replays_cleanly(set), ps);
    rec.expect("set profile is a peakless weak Dyck path",
               set_profile.is_peakless_weak_dyck(), ps);

    if (!stack) {
      rec.expect("stack blockers are genuine 312 occurrences",
                 genuine_witness(p, *stack.blocker, p312), ps);
      rec.expect("push/pop blockers are genuine 312 occurrences",
                 genuine_witness(p, *push_pop.blocker, p312), ps);
    }
    if (!queue) {
      rec.expect("queue blockers are genuine 321 occurrences",
                 genuine_witness(p, *queue.blocker, p321), ps);
    }

    if (s312) {
      ++report.stackable;
      const auto profile = trace_height_profile(*stack.trace);
      const auto full = trace_height_profile(*push_pop.trace);
      rec.expect("stack traces replay to their output",
                 replays_cleanly(*stack.trace) && replays_cleanly(*push_pop.trace, false) &&
                     stack.trace->output == p && push_pop.trace->output == p,
                 ps);
      rec.expect("push/pop profile is a Dyck path of length 2n",
                 full.is_dyck() && full.length() == static_cast<std::size_t>(2 * n), ps);
      rec.expect("removing peaks from the push/pop profile gives the transfer profile",
                 full.is_dyck() && remove_peaks(full) == profile, ps);
      rec.expect("stack profile is a peakless weak Dyck path",
                 profile.is_peakless_weak_dyck(), ps);
      rec.expect("stack and set profiles coincide on 312-avoiders",
                 profile == set_profile, ps);
      rec.expect("decode_stackable inverts the stack profile",
                 decode_stackable(profile) == p, ps);
      const auto q = knuth_richards(p);
      kr_images.insert(q);
      rec.expect("knuth_richards lands in the 321-avoiders", avoids_321(q), ps);
      rec.expect("knuth_richards_inv undoes knuth_richards",
                 avoids_321(q) && knuth_richards_inv(q) == p, ps);
      rec.expect("stackit fixes 312-avoiders", stackit(p) == p, ps);
      rec.expect("queueit restricted to 312-avoiders is knuth_richards",
                 queueit(p) == q, ps);
    }
    if (s321) {
      ++report.queueable;
      const auto profile = trace_height_profile(*queue.trace);
      rec.expect("queue traces replay to their output",
                 replays_cleanly(*queue.trace) && queue.trace->output == p, ps);
      rec.expect("queue profile is a peakless weak Dyck path",
                 profile.is_peakless_weak_dyck(), ps);
      rec.expect("queue and set profiles coincide on 321-avoiders",
                 profile == set_profile, ps);
      rec.expect("decode_queueable inverts the queue profile",
                 decode_queueable(profile) == p, ps);
      std::vector<int> xfers;
      for (const auto& op : queue.trace->ops) {
        if (op.kind == OpKind::xfer) xfers.push_back(op.value);
      }
      std::vector<int> records;
      for (int pos : record_setters(p)) records.push_back(p[pos - 1]);
      rec.expect("queue transfers are the record setters", xfers == records, ps);
      const auto s = knuth_richards_inv(p);
      kr_inv_images.insert(s);
      rec.expect("knuth_richards_inv lands in the 312-avoiders", avoids_312(s), ps);
      rec.expect("knuth_richards undoes knuth_richards_inv",
                 avoids_312(s) && knuth_richards(s) == p, ps);
      rec.expect("queueit fixes 321-avoiders", queueit(p) == p, ps);
      rec.expect("stackit restricted to 321-avoiders is knuth_richards_inv",
                 stackit(p) == s, ps);
    }

    const auto st = stackit(p);
    const auto qu = queueit(p);
    rec.expect("stackit lands in the 312-avoiders and is idempotent",
               avoids_312(st) && stackit(st) == st, ps);
    rec.expect("queueit lands in the 321-avoiders and is idempotent",
               avoids_321(qu) && queueit(qu) == qu, ps);
  });

  const BigInt cat = catalan(n);
  const auto count_detail = [&](std::uint64_t got) {
    return "counted " + std::to_string(got) + ", catalan(n) = " + cat.str();
  };
  rec.expect("stackable count is catalan(n)", BigInt(report.stackable) == cat,
             count_detail(report.stackable));
  rec.expect("queueable count is catalan(n)", BigInt(report.queueable) == cat,
             count_detail(report.queueable));
  rec.expect("knuth_richards is injective", kr_images.size() == report.stackable,
             count_detail(kr_images.size()));
  rec.expect("knuth_richards_inv is injective",
             kr_inv_images.size() == report.queueable,
             count_detail(kr_inv_images.size()));

  std::set<Permutation> decoded_stack;
  std::set<Permutation> decoded_queue;
  for_each_dyck_path(n, [&](const LatticePath& d) {
    const auto flat = remove_peaks(d);
    rec.expect("restore_peaks undoes remove_peaks",
               flat.is_peakless_weak_dyck() && restore_peaks(flat) == d, d.word());
    const auto s = decode_stackable(flat);
    const auto q = decode_queueable(flat);
    decoded_stack.insert(s);
    decoded_queue.insert(q);
    rec.expect("decoded stack permutations avoid 312 and re-encode",
               avoids_312(s) &&
                   trace_height_profile(*realize_with_stack(s, true).trace) == flat,
               flat.word());
    rec.expect("decoded queue permutations avoid 321 and re-encode",
               avoids_321(q) &&
                   trace_height_profile(*realize_with_queue(q).trace) == flat,
               flat.word());
  });
  rec.expect("decode_stackable is injective on peakless paths",
             BigInt(decoded_stack.size()) == cat, count_detail(decoded_stack.size()));
  rec.expect("decode_queueable is injective on peakless paths",
             BigInt(decoded_queue.size()) == cat, count_detail(decoded_queue.size()));

  report.checks = rec.take();
  return report;
}

}  // namespace permdek
