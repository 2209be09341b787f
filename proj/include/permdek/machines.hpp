#pragma once

// Single-container machines fed by the input stream 1,2,...,n: the greedy
// stack procedure, the lazy queue procedure and the lazy set procedure.
// Each produces a canonical trace whose height profile is a lattice path.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permdek/lattice_path.hpp"
#include "permdek/perm.hpp"

namespace permdek {

enum class OpKind {
  move_in,  // input front -> container
  emit,     // container -> output
  xfer,     // input front -> output
};

enum class MachineKind { stack, queue, set };

std::string_view to_string(OpKind k);
std::string_view to_string(MachineKind k);

struct MachineOp {
  OpKind kind;
  int value;
  friend bool operator==(const MachineOp&, const MachineOp&) = default;
};

struct MachineTrace {
  MachineKind machine = MachineKind::stack;
  std::vector<MachineOp> ops;
  Permutation output;
  std::vector<int> heights;  // container size after each op
};

class TraceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Replays `ops` against `machine` with input 1..n and checks legality at
/// every step, full consumption of the input and an empty container at the
/// end. Throws TraceError naming the first illegal op.
MachineTrace replay(MachineKind machine, std::span<const MachineOp> ops, int n);

/// Outcome of a realization attempt: a trace, or the pattern occurrence
/// that blocked the procedure.
struct Realization {
  std::optional<MachineTrace> trace;
  std::optional<PatternWitness> blocker;

  explicit operator bool() const noexcept { return trace.has_value(); }
};

/// Without transfers: the unique push/pop trace. With transfers: each
/// next-needed value still in the input is transferred after pushing the
/// values ahead of it. Fails exactly on 312-containing inputs; the blocker
/// reads (3,1,2) in output order.
Realization realize_with_stack(const Permutation& p, bool allow_xfer);

/// Lazy queue trace: values enter the queue only to uncover the next
/// needed input value, which is then transferred. Fails exactly on
/// 321-containing inputs; the blocker reads (3,2,1) in output order.
Realization realize_with_queue(const Permutation& p);

/// Lazy trace with a container that releases any requested value.
MachineTrace realize_with_set(const Permutation& p);

/// MOVE_IN -> U, EMIT -> D, XFER -> H.
LatticePath trace_height_profile(const MachineTrace& trace);

/// Sum over stored values of (op index of EMIT - op index of MOVE_IN).
long long storage_cost(const MachineTrace& trace);

/// One op per line (`IN v`, `OUT v`, `XFER v`), then the heights as a
/// comma-separated list.
std::string render_trace(const MachineTrace& trace);

}  // namespace permdek
