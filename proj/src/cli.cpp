#include "permdek/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permdek/dek.hpp"
#include "permdek/dyck.hpp"
#include "permdek/enumerate.hpp"
#include "permdek/machines.hpp"
#include "permdek/service.hpp"
#include "log.hpp"

namespace permdek {

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

// Thrown for argument values CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Permutation parse_perm(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const PermutationError& e) {
    throw UsageError(std::string("malformed permutation: ") + e.what());
  }
}

struct Options {
  std::string perm;
  std::string pattern;
  bool inverse = false;
  std::string machine;
  bool xfer = false;
  bool no_xfer = false;
  std::string format = "word";
  bool show_trace = false;
  int n = 0;
  int from = 1;
  bool json = false;
  bool serial = false;
  bool witness = false;
  std::string mode = "clairvoyant";
  int port = 8080;
  std::string bind = "127.0.0.1";
};

int cmd_check(const Options& o, std::ostream& out) {
  const auto p = parse_perm(o.perm);
  auto verdict = [&](const std::string& name, const std::optional<PatternWitness>& w) {
    if (w) {
      out << "contains " << name << " at " << w->to_string() << '\n';
    } else {
      out << "avoids " << name << '\n';
    }
    return !w.has_value();
  };
  if (o.pattern == "312") return verdict("312", witness_312(p)) ? kOk : kDomainFailure;
  if (o.pattern == "321") return verdict("321", witness_321(p)) ? kOk : kDomainFailure;
  verdict("312", witness_312(p));
  verdict("321", witness_321(p));
  return kOk;
}

int cmd_map(const Options& o, std::ostream& out, std::ostream& err) {
  const auto p = parse_perm(o.perm);
  try {
    out << (o.inverse ? knuth_richards_inv(p) : knuth_richards(p)).to_string() << '\n';
    return kOk;
  } catch (const ClassError& e) {
    err << e.what() << '\n';
    return kDomainFailure;
  }
}

int cmd_path(const Options& o, std::ostream& out, std::ostream& err) {
  const auto p = parse_perm(o.perm);
  Realization r;
  if (o.machine == "stack") {
    r = realize_with_stack(p, o.xfer);
  } else if (o.machine == "queue") {
    r = realize_with_queue(p);
  } else {
    r.trace = realize_with_set(p);
  }
  if (!r) {
    err << "not realizable with a " << o.machine << ": blocked by "
        << r.blocker->to_string() << '\n';
    return kDomainFailure;
  }
  if (o.show_trace) out << render_trace(*r.trace);
  const auto path = trace_height_profile(*r.trace);
  if (o.format == "ascii") {
    out << render_ascii(path);
  } else {
    out << path.word() << '\n';
  }
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto config = MachineConfig::parse(o.machine, !o.no_xfer);
  if (o.n < 0 || o.n > kMaxCount) {
    throw UsageError("--n must lie in 0.." + std::to_string(kMaxCount));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int n = std::min(o.from, o.n); n <= o.n; ++n) {
    const auto t = o.serial ? count_obtainable_serial(config, n) : count_obtainable(config, n);
    if (o.json) {
      rows.push_back({{"config", config.name()},
                      {"n", n},
                      {"count", t.count.convert_to<std::uint64_t>()},
                      {"catalan", catalan(n).convert_to<std::uint64_t>()},
                      {"elapsed_ms", t.elapsed.count()}});
    } else {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(3) << t.elapsed.count();
      out << config.name() << '\t' << n << '\t' << t.count << '\t' << catalan(n) << '\t'
          << ms.str() << '\n';
    }
  }
  if (o.json) out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto report = verify_bijection_suite(o.n);
  out << report.to_string();
  return report.passed() ? kOk : kDomainFailure;
}

int cmd_dek_solve(const Options& o, std::ostream& out) {
  const auto p = parse_perm(o.perm);
  const auto r = clairvoyant_winnable(p);
  out << (r.winnable ? "winnable" : "not winnable") << '\n';
  if (r.winnable && o.witness) {
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      out << (i ? " " : "") << to_string(r.witness[i]);
    }
    out << '\n';
  }
  return r.winnable ? kOk : kDomainFailure;
}

int cmd_dek_prob(const Options& o, std::ostream& out) {
  const WinValue v =
      o.mode == "policy" ? optimal_policy_value(o.n) : win_probability_clairvoyant(o.n);
  out << v.to_string() << '\t' << std::setprecision(9) << v.to_double() << '\n';
  return kOk;
}

}  // namespace

void configure_logging() {
  auto logger = detail::logger();
  if (const char* env = std::getenv("PERMDEK_LOG")) {
    logger->set_level(spdlog::level::from_str(env));
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stack/queue permutations, Dyck paths and the DEK solitaire", "permdek"};
  app.require_subcommand(1);
  Options o;

  auto perm_option = [&](CLI::App* cmd, const char* flag = "--perm") {
    cmd->add_option(flag, o.perm, "permutation, e.g. 2,1,5,7,6,4,3")->required();
  };

  auto* check = app.add_subcommand("check", "report 312/321 avoidance");
  perm_option(check);
  check->add_option("--pattern", o.pattern, "only test this pattern")
      ->check(CLI::IsMember({"312", "321"}));

  auto* map = app.add_subcommand("map", "stack-to-queue bijection (or its inverse)");
  perm_option(map);
  map->add_flag("--inverse", o.inverse, "queue-to-stack direction");

  auto* stackit_cmd = app.add_subcommand("stackit", "project onto stackable permutations");
  perm_option(stackit_cmd);
  auto* queueit_cmd = app.add_subcommand("queueit", "project onto queueable permutations");
  perm_option(queueit_cmd);

  auto* path = app.add_subcommand("path", "height profile of the canonical trace");
  perm_option(path);
  path->add_option("--machine", o.machine, "stack, queue or set")
      ->required()
      ->check(CLI::IsMember({"stack", "queue", "set"}));
  path->add_flag("--xfer", o.xfer, "allow direct transfers (stack only)");
  path->add_option("--format", o.format, "word or ascii")
      ->check(CLI::IsMember({"word", "ascii"}));
  path->add_flag("--show-trace", o.show_trace, "print the operations first");

  auto* count = app.add_subcommand("count", "count obtainable permutations per n");
  count->add_option("--n", o.n, "largest n")->required();
  count->add_option("--from", o.from, "smallest n (default 1)");
  count->add_option("--machine", o.machine, "machine configuration")
      ->required()
      ->check(CLI::IsMember({"stack", "queue", "deque", "two-stacks", "two-queues",
                             "two-deques", "stack-queue", "stack-deque", "queue-deque"}));
  count->add_flag("--no-xfer", o.no_xfer, "forbid direct transfers");
  count->add_flag("--json", o.json, "emit a JSON array");
  count->add_flag("--serial", o.serial, "use the single-threaded reference sweep");

  auto* verify = app.add_subcommand("verify", "exhaustive bijection checks over S_n");
  verify->add_option("--n", o.n, "size")->required();

  auto* dek_solve = app.add_subcommand("dek-solve", "is this DEK deal winnable?");
  perm_option(dek_solve, "--shuffle");
  dek_solve->add_flag("--witness", o.witness, "print a winning line");

  auto* dek_prob = app.add_subcommand("dek-prob", "exact DEK win probability");
  dek_prob->add_option("--n", o.n, "deck size")->required();
  dek_prob->add_option("--mode", o.mode, "clairvoyant or policy")
      ->check(CLI::IsMember({"clairvoyant", "policy"}));

  auto* serve = app.add_subcommand("dek-serve", "run the JSON game service");
  serve->add_option("--port", o.port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--bind", o.bind, "listen address (default loopback)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (map->parsed()) return cmd_map(o, out, err);
    if (stackit_cmd->parsed()) {
      out << stackit(parse_perm(o.perm)).to_string() << '\n';
      return kOk;
    }
    if (queueit_cmd->parsed()) {
      out << queueit(parse_perm(o.perm)).to_string() << '\n';
      return kOk;
    }
    if (path->parsed()) return cmd_path(o, out, err);
    if (count->parsed()) return cmd_count(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (dek_solve->parsed()) return cmd_dek_solve(o, out);
    if (dek_prob->parsed()) return cmd_dek_prob(o, out);
    if (serve->parsed()) {
      return service::serve_http(o.port, o.bind) ? kOk : kDomainFailure;
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace permdek
