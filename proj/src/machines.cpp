#include "permdek/machines.hpp"

#include <algorithm>
#include <deque>

namespace permdek {

std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::move_in: return "IN";
    case OpKind::emit: return "OUT";
    case OpKind::xfer: return "XFER";
  }
  return "?";
}

std::string_view to_string(MachineKind k) {
  switch (k) {
    case MachineKind::stack: return "stack";
    case MachineKind::queue: return "queue";
    case MachineKind::set: return "set";
  }
  return "?";
}

MachineTrace replay(MachineKind machine, std::span<const MachineOp> ops, int n) {
  std::deque<int> store;
  std::vector<int> output;
  std::vector<int> heights;
  heights.reserve(ops.size());
  int next_in = 1;

  auto fail = [&](std::size_t t, const std::string& why) {
    throw TraceError("op " + std::to_string(t) + " (" +
                     std::string(to_string(ops[t].kind)) + " " +
                     std::to_string(ops[t].value) + "): " + why);
  };

  for (std::size_t t = 0; t < ops.size(); ++t) {
    const auto [kind, value] = ops[t];
    switch (kind) {
      case OpKind::move_in:
      case OpKind::xfer:
        if (next_in > n) fail(t, "input is exhausted");
        if (value != next_in) {
          fail(t, "input front is " + std::to_string(next_in));
        }
        ++next_in;
        if (kind == OpKind::move_in) {
          store.push_back(value);
        } else {
          output.push_back(value);
        }
        break;
      case OpKind::emit: {
        if (store.empty()) fail(t, "container is empty");
        if (machine == MachineKind::stack && store.back() != value) {
          fail(t, "stack top is " + std::to_string(store.back()));
        }
        if (machine == MachineKind::queue && store.front() != value) {
          fail(t, "queue head is " + std::to_string(store.front()));
        }
        const auto it = std::find(store.begin(), store.end(), value);
        if (it == store.end()) fail(t, "value is not in the container");
        store.erase(it);
        output.push_back(value);
        break;
      }
    }
    heights.push_back(static_cast<int>(store.size()));
  }
  if (next_in <= n) {
    throw TraceError("trace ends with input " + std::to_string(next_in) +
                     " still unread");
  }
  if (!store.empty()) {
    throw TraceError("trace ends with " + std::to_string(store.size()) +
                     " values still stored");
  }
  return MachineTrace{machine, {ops.begin(), ops.end()},
                      trusted_permutation(std::move(output)), std::move(heights)};
}

namespace {

// The shared lazy procedure. Values enter the container only to uncover
// the next needed input value; the container discipline decides which
// stored values can leave.
Realization realize_lazy(const Permutation& p, MachineKind machine, bool allow_xfer) {
  const int n = p.size();
  std::deque<int> store;
  MachineTrace trace;
  trace.machine = machine;
  trace.ops.reserve(static_cast<std::size_t>(2 * n));
  trace.heights.reserve(static_cast<std::size_t>(2 * n));
  int next_in = 1;
  int max_out = 0;

  auto record = [&](OpKind kind, int value) {
    trace.ops.push_back({kind, value});
    trace.heights.push_back(static_cast<int>(store.size()));
  };

  for (int k = 0; k < n; ++k) {
    const int v = p[k];
    if (v >= next_in) {
      while (next_in < v) {
        store.push_back(next_in);
        record(OpKind::move_in, next_in++);
      }
      ++next_in;
      if (allow_xfer) {
        record(OpKind::xfer, v);
      } else {
        store.push_back(v);
        record(OpKind::move_in, v);
        store.pop_back();
        record(OpKind::emit, v);
      }
    } else {
      int blocker = 0;
      if (machine == MachineKind::stack && store.back() != v) blocker = store.back();
      if (machine == MachineKind::queue && store.front() != v) blocker = store.front();
      if (blocker != 0) {
        // max_out was output before v and forced `blocker` into storage.
        const auto where = p.inverse();
        const int a = where[max_out - 1];
        const int c = where[blocker - 1];
        return Realization{std::nullopt,
                           PatternWitness{{a, k + 1, c}, {max_out, v, blocker}}};
      }
      store.erase(std::find(store.begin(), store.end(), v));
      record(OpKind::emit, v);
    }
    max_out = std::max(max_out, v);
  }
  trace.output = p;
  return Realization{std::move(trace), std::nullopt};
}

}  // namespace

Realization realize_with_stack(const Permutation& p, bool allow_xfer) {
  return realize_lazy(p, MachineKind::stack, allow_xfer);
}

Realization realize_with_queue(const Permutation& p) {
  return realize_lazy(p, MachineKind::queue, true);
}

MachineTrace realize_with_set(const Permutation& p) {
  return *realize_lazy(p, MachineKind::set, true).trace;
}

LatticePath trace_height_profile(const MachineTrace& trace) {
  std::vector<Step> steps;
  steps.reserve(trace.ops.size());
  for (const auto& op : trace.ops) {
    switch (op.kind) {
      case OpKind::move_in: steps.push_back(Step::up); break;
      case OpKind::emit: steps.push_back(Step::down); break;
      case OpKind::xfer: steps.push_back(Step::flat); break;
    }
  }
  return LatticePath(std::move(steps));
}

long long storage_cost(const MachineTrace& trace) {
  const auto n = static_cast<std::size_t>(trace.output.size());
  std::vector<long long> entered(n + 1, -1);
  long long cost = 0;
  for (std::size_t t = 0; t < trace.ops.size(); ++t) {
    const auto& op = trace.ops[t];
    const auto v = static_cast<std::size_t>(op.value);
    if (op.kind == OpKind::move_in) entered[v] = static_cast<long long>(t);
    if (op.kind == OpKind::emit) cost += static_cast<long long>(t) - entered[v];
  }
  return cost;
}

std::string render_trace(const MachineTrace& trace) {
  std::string out;
  for (const auto& op : trace.ops) {
    out += to_string(op.kind);
    out += ' ';
    out += std::to_string(op.value);
    out += '\n';
  }
  for (std::size_t i = 0; i < trace.heights.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(trace.heights[i]);
  }
  out += '\n';
  return out;
}

}  // namespace permdek
