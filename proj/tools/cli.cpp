#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "onetwo/bicoloring.hpp"
#include "onetwo/canonical.hpp"
#include "onetwo/oracle.hpp"
#include "onetwo/solver_ab.hpp"
#include "onetwo/solver_onetwo.hpp"
#include "onetwo/solver_total.hpp"
#include "onetwo/tree.hpp"
#include "onetwo/upsilon.hpp"

namespace onetwo::cli {
namespace {

using json = nlohmann::json;

// Carries an exit code out of a command body.
struct Failure {
  int code;
  std::string message;
};

enum class Solver { k12, kAB, kTotal };

struct SolveMode {
  Solver solver = Solver::k12;
  std::uint32_t a = 1;
  std::uint32_t b = 2;

  Mode as_mode() const {
    return solver == Solver::kTotal ? Mode::total(a, b) : Mode::interval(a, b);
  }
  std::string name() const {
    switch (solver) {
      case Solver::k12: return "12";
      case Solver::kAB: return "ab:" + std::to_string(a) + ":" + std::to_string(b);
      case Solver::kTotal:
        if (a == 1 && b == 2) return "total12";
        return "totalab:" + std::to_string(a) + ":" + std::to_string(b);
    }
    return "?";
  }
};

// --mode {12|ab|total12|totalab} with --a/--b.
SolveMode resolve_mode(const std::string& mode, std::optional<std::int64_t> a,
                       std::optional<std::int64_t> b) {
  auto bounds = [&](std::int64_t min_a) {
    if (!a || !b) throw Failure{kExitUsage, "--mode " + mode + " needs --a and --b"};
    if (*a < min_a || *a > *b || *b > UINT32_MAX) {
      throw Failure{kExitUsage, "need " + std::to_string(min_a) + " <= a <= b"};
    }
    return std::pair{static_cast<std::uint32_t>(*a), static_cast<std::uint32_t>(*b)};
  };
  if (mode == "12") return {Solver::k12, 1, 2};
  if (mode == "total12") return {Solver::kTotal, 1, 2};
  if (mode == "ab") {
    auto [x, y] = bounds(0);
    return {Solver::kAB, x, y};
  }
  if (mode == "totalab") {
    auto [x, y] = bounds(1);
    return {Solver::kTotal, x, y};
  }
  throw Failure{kExitUsage, "unknown mode '" + mode + "'"};
}

// verify's compact form: 12, total12, ab:A:B, totalab:A:B.
SolveMode parse_mode_token(const std::string& token) {
  if (token == "12" || token == "total12") return resolve_mode(token, {}, {});
  const auto first = token.find(':');
  const auto second = token.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw Failure{kExitUsage, "bad mode token '" + token + "'"};
  }
  try {
    const auto a = std::stoll(token.substr(first + 1, second - first - 1));
    const auto b = std::stoll(token.substr(second + 1));
    return resolve_mode(token.substr(0, first), a, b);
  } catch (const std::logic_error&) {
    throw Failure{kExitUsage, "bad mode token '" + token + "'"};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct LoadedTree {
  RootedTree tree;
  std::string digest;
};

LoadedTree load_tree(const std::string& path, Vertex root) {
  const auto text = read_file(path);
  try {
    return {parse_tree(text, root), digest(text)};
  } catch (const TreeError& e) {
    throw Failure{kExitInput, path + ": " + to_string(e.kind()).data() + ": " + e.what()};
  }
}

json cost_json(CostValue x) { return x.is_finite() ? json(x.value()) : json("inf"); }

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

template <typename F>
double best_time_ms(int repeats, F&& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, elapsed_ms(t0));
  }
  return best;
}

struct SolveOutcome {
  CostValue gamma;
  std::optional<Count> count;
  std::optional<std::vector<Vertex>> witness;
};

SolveOutcome solve_any(const RootedTree& tree, const SolveMode& mode, bool want_count,
                       bool want_witness) {
  SolveOutcome o;
  switch (mode.solver) {
    case Solver::k12: {
      const auto table = solve12(tree);
      o.gamma = gamma12(table);
      if (want_count) o.count = count_sets(tree, table);
      if (want_witness) o.witness = extract_set(tree, table).black;
      break;
    }
    case Solver::kAB: {
      const auto table = solve_ab(tree, mode.a, mode.b);
      o.gamma = gamma_ab(table);
      if (want_count) o.count = count_sets_ab(tree, table);
      if (want_witness) {
        if (auto s = extract_set_ab(tree, table)) o.witness = s->black;
      }
      break;
    }
    case Solver::kTotal: {
      const auto table = solve_total(tree, mode.a, mode.b);
      o.gamma = gamma_total(table);
      if (want_count) o.count = count_total_sets(tree, table);
      if (want_witness) {
        if (auto s = extract_total_set(tree, table)) o.witness = s->black;
      }
      break;
    }
  }
  return o;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string file;
  std::string mode = "12";
  std::optional<std::int64_t> a, b;
  Vertex root = 1;
  bool witness = false, count = false, as_json = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const auto mode = resolve_mode(args.mode, args.a, args.b);
  const auto loaded = load_tree(args.file, args.root);
  const auto t0 = std::chrono::steady_clock::now();
  const auto o = solve_any(loaded.tree, mode, args.count, args.witness);
  const double ms = elapsed_ms(t0);
  const int code = o.gamma.is_finite() ? kExitOk : kExitNoSet;
  if (args.as_json) {
    json doc{{"command", "solve"},      {"mode", mode.name()}, {"input", args.file},
             {"input_digest", loaded.digest}, {"n", loaded.tree.size()}, {"root", args.root},
             {"gamma", cost_json(o.gamma)}, {"timings_ms", {{"solve", ms}}}, {"exit", code}};
    if (o.count) doc["count"] = o.count->str();
    if (args.witness) doc["witness"] = o.witness ? json(*o.witness) : json(nullptr);
    emit(out, doc);
  } else {
    out << "gamma=" << o.gamma << '\n';
    if (o.count) out << "count=" << o.count->str() << '\n';
    if (args.witness) out << "witness=" << (o.witness ? format_set(*o.witness) : "none") << '\n';
  }
  return code;
}

// ------------------------------------------------------------ enumerate

struct EnumerateArgs {
  std::string file;
  std::size_t limit = 1000;
  Vertex root = 1;
  bool as_json = false;
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const auto loaded = load_tree(args.file, args.root);
  const auto table = solve12(loaded.tree);
  const auto total = count_sets(loaded.tree, table);
  std::vector<std::vector<Vertex>> sets;
  if (args.limit > 0) {
    auto stream = enumerate_sets(loaded.tree, table);
    while (sets.size() < args.limit) {
      auto s = stream.next();
      if (!s) break;
      sets.push_back(std::move(s->black));
    }
  }
  if (args.as_json) {
    emit(out, json{{"command", "enumerate"}, {"input", args.file},
                   {"input_digest", loaded.digest}, {"gamma", cost_json(gamma12(table))},
                   {"count", total.str()}, {"limit", args.limit}, {"sets", sets}, {"exit", kExitOk}});
  } else {
    for (const auto& s : sets) out << format_set(s) << '\n';
    out << "count=" << total.str() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string file;
  std::string set;
  std::string mode = "12";
  std::optional<std::int64_t> a, b;
  bool as_json = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const auto mode = resolve_mode(args.mode, args.a, args.b);
  const auto loaded = load_tree(args.file, 1);
  std::vector<Vertex> s;
  try {
    s = parse_set(args.set);
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, e.what()};
  }
  bool valid = false;
  try {
    valid = validate_set(loaded.tree, s, mode.as_mode());
  } catch (const std::out_of_range& e) {
    throw Failure{kExitInput, e.what()};
  }
  if (args.as_json) {
    emit(out, json{{"command", "check"}, {"mode", mode.name()}, {"input_digest", loaded.digest},
                   {"set", s}, {"valid", valid}, {"exit", kExitOk}});
  } else {
    out << "valid=" << (valid ? "true" : "false") << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- oracle

struct OracleArgs {
  std::string file;
  std::string mode = "12";
  std::optional<std::int64_t> a, b;
  std::size_t limit = 0;
  bool as_json = false;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const auto mode = resolve_mode(args.mode, args.a, args.b);
  const auto loaded = load_tree(args.file, 1);
  if (loaded.tree.size() > kOracleMaxVertices) {
    throw Failure{kExitUsage, "oracle cap is " + std::to_string(kOracleMaxVertices) + " vertices"};
  }
  const auto r = oracle_solve(loaded.tree, mode.as_mode(), args.limit > 0, args.limit);
  const int code = r.min_size.is_finite() ? kExitOk : kExitNoSet;
  if (args.as_json) {
    emit(out, json{{"command", "oracle"}, {"mode", mode.name()}, {"input_digest", loaded.digest},
                   {"gamma", cost_json(r.min_size)}, {"count", r.count.str()}, {"sets", r.sets},
                   {"truncated", r.truncated}, {"exit", code}});
  } else {
    out << "gamma=" << r.min_size << '\n' << "count=" << r.count.str() << '\n';
    for (const auto& s : r.sets) out << format_set(s) << '\n';
  }
  return code;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::size_t max_n = 8;
  std::string modes = "12,total12";
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool as_json = false;
};

// Compares one rooted instance against the oracle. Returns a description of
// the first mismatch, or nothing.
std::optional<std::string> verify_instance(const RootedTree& tree, const SolveMode& mode,
                                           const OracleResult& truth) {
  const auto o = solve_any(tree, mode, true, true);
  if (o.gamma != truth.min_size) {
    return "gamma " + o.gamma.to_string() + " vs oracle " + truth.min_size.to_string();
  }
  if (*o.count != truth.count) return "count " + o.count->str() + " vs oracle " + truth.count.str();
  if (o.gamma.is_finite()) {
    if (!o.witness || o.witness->size() != o.gamma.value() ||
        !validate_set(tree, *o.witness, mode.as_mode())) {
      return "witness is not a minimum set";
    }
  }
  if (mode.solver == Solver::k12 && !truth.truncated) {
    const auto table = solve12(tree);
    std::set<std::vector<Vertex>> got;
    auto stream = enumerate_sets(tree, table);
    while (auto s = stream.next()) {
      if (!got.insert(s->black).second) return "enumeration repeated a set";
    }
    if (got != std::set<std::vector<Vertex>>(truth.sets.begin(), truth.sets.end())) {
      return "enumerated family differs from the oracle";
    }
  }
  return std::nullopt;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.max_n < 1 || args.max_n > kOracleMaxVertices) {
    throw Failure{kExitUsage, "--max-n must be in 1.." + std::to_string(kOracleMaxVertices) +
                                  " (oracle cap exceeded)"};
  }
  std::vector<SolveMode> modes;
  {
    std::stringstream ss(args.modes);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) modes.push_back(parse_mode_token(token));
    }
  }
  if (modes.empty()) throw Failure{kExitUsage, "no modes given"};

  std::vector<RootedTree> trees;
  for (std::size_t n = 1; n <= args.max_n; ++n) {
    for (auto& t : all_free_trees(n)) trees.push_back(std::move(t));
  }
  std::vector<RootedTree> samples;
  for (std::size_t i = 0; i < args.samples; ++i) samples.push_back(random_tree(args.max_n, args.seed + i));

  bool all_pass = true;
  json report = json::array();
  for (const auto& mode : modes) {
    std::size_t instances = 0, failures = 0;
    std::string first_failure;
    auto run_tree = [&](const RootedTree& base, bool every_root) {
      const auto truth = oracle_solve(base, mode.as_mode(), mode.solver == Solver::k12, 100000);
      const Vertex last = every_root ? static_cast<Vertex>(base.size()) : 1;
      for (Vertex r = 1; r <= last; ++r) {
        ++instances;
        if (auto bad = verify_instance(base.rerooted(r), mode, truth)) {
          if (failures++ == 0) {
            first_failure = *bad + " on tree {" + to_edge_list(base) + "} root " + std::to_string(r);
          }
        }
      }
    };
    for (const auto& t : trees) run_tree(t, true);
    for (const auto& t : samples) run_tree(t, false);
    const bool pass = failures == 0;
    all_pass = all_pass && pass;
    report.push_back({{"mode", mode.name()}, {"instances", instances}, {"failures", failures},
                      {"pass", pass}});
    if (!args.as_json) {
      out << "mode " << mode.name() << ": " << (pass ? "PASS" : "FAIL") << " (trees=" << trees.size()
          << ", samples=" << samples.size() << ", instances=" << instances
          << ", failures=" << failures << ")\n";
      if (!pass) out << "  first failure: " << first_failure << '\n';
    }
  }
  const int code = all_pass ? kExitOk : kExitMismatch;
  if (args.as_json) {
    emit(out, json{{"command", "verify"}, {"max_n", args.max_n}, {"modes", report},
                   {"pass", all_pass}, {"exit", code}});
  } else {
    out << (all_pass ? "PASS" : "FAIL") << '\n';
  }
  return code;
}

// ------------------------------------------------------------- generate

struct GenerateArgs {
  std::size_t max_n = 6;
  bool trace = false;
  bool as_json = false;
};

std::string edge_string(const RootedTree& tree) {
  std::string s;
  for (const auto& [u, v] : tree.edges()) {
    if (!s.empty()) s += ',';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  if (args.max_n < 2) throw Failure{kExitUsage, "--max-n must be at least 2"};
  auto gen = generate(args.max_n);
  json items = json::array();
  std::size_t emitted = 0;
  while (auto ct = gen.next()) {
    ++emitted;
    if (args.as_json) {
      json item{{"n", ct->tree.size()}, {"edges", ct->tree.edges()}, {"set", ct->black}};
      if (args.trace) item["trace"] = format_provenance(ct->provenance);
      items.push_back(std::move(item));
    } else {
      out << "n=" << ct->tree.size() << " edges=" << edge_string(ct->tree)
          << " set=" << format_set(ct->black);
      if (args.trace) out << " trace=" << format_provenance(ct->provenance);
      out << '\n';
    }
  }
  if (args.as_json) {
    emit(out, json{{"command", "generate"}, {"max_n", args.max_n}, {"count", emitted},
                   {"items", items}, {"exit", kExitOk}});
  } else {
    out << "count=" << emitted << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------- random-tree

struct RandomTreeArgs {
  std::size_t n = 8;
  std::uint64_t seed = 1;
  bool as_json = false;
};

int cmd_random_tree(const RandomTreeArgs& args, std::ostream& out) {
  if (args.n < 1) throw Failure{kExitUsage, "--n must be at least 1"};
  const auto tree = random_tree(args.n, args.seed);
  if (args.as_json) {
    emit(out, json{{"command", "random-tree"}, {"n", args.n}, {"seed", args.seed},
                   {"edges", tree.edges()}, {"exit", kExitOk}});
  } else {
    out << to_edge_list(tree);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> sizes{1u << 16, 1u << 17, 1u << 18, 1u << 19, 1u << 20, 1u << 21};
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> b_values{2, 8, 32};
  std::size_t b_n = 1'000'000;
  int repeats = 3;
  bool as_json = false;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
#if defined(__GLIBC__)
  // Same allocation path for every size; see the acceptance harness.
  mallopt(M_MMAP_THRESHOLD, 128 * 1024);
#endif
  if (args.sizes.empty() || std::count(args.sizes.begin(), args.sizes.end(), 0u) > 0) {
    throw Failure{kExitUsage, "--sizes must be positive"};
  }
  json rows = json::array();
  if (!args.as_json) {
    out << std::setw(10) << "n" << std::setw(14) << "solve12_ms" << std::setw(14) << "solve_ab_ms"
        << std::setw(16) << "solve_total_ms" << '\n';
  }
  for (std::size_t n : args.sizes) {
    const auto tree = random_tree(n, args.seed);
    const double t12 = best_time_ms(args.repeats, [&] { (void)gamma12(solve12(tree)); });
    const double tab = best_time_ms(args.repeats, [&] { (void)gamma_ab(solve_ab(tree, 1, 2)); });
    const double ttot = best_time_ms(args.repeats, [&] { (void)gamma_total(solve_total(tree, 1, 2)); });
    rows.push_back({{"n", n}, {"solve12_ms", t12}, {"solve_ab_ms", tab}, {"solve_total_ms", ttot}});
    if (!args.as_json) {
      out << std::setw(10) << n << std::fixed << std::setprecision(3) << std::setw(14) << t12
          << std::setw(14) << tab << std::setw(16) << ttot << '\n';
    }
  }
  json b_rows = json::array();
  if (!args.b_values.empty() && args.b_n > 0) {
    const auto tree = random_tree(args.b_n, args.seed);
    if (!args.as_json) out << "solve_ab(1, b) at n=" << args.b_n << '\n';
    for (std::uint32_t b : args.b_values) {
      const double t = best_time_ms(args.repeats, [&] { (void)gamma_ab(solve_ab(tree, 1, b)); });
      b_rows.push_back({{"b", b}, {"solve_ab_ms", t}});
      if (!args.as_json) out << std::setw(10) << b << std::setw(14) << t << '\n';
    }
  }
  if (args.as_json) {
    emit(out, json{{"command", "bench"}, {"seed", args.seed}, {"sizes", rows},
                   {"b_sweep", {{"n", args.b_n}, {"rows", b_rows}}}, {"exit", kExitOk}});
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum [1,2]-, [a,b]- and total [a,b]-sets of trees"};
  app.name("onetwo");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "minimum set size, count and witness");
  solve_cmd->add_option("file", solve.file, "edge-list file")->required();
  solve_cmd->add_option("--mode", solve.mode, "12 | ab | total12 | totalab");
  solve_cmd->add_option("--a", solve.a, "lower bound");
  solve_cmd->add_option("--b", solve.b, "upper bound");
  solve_cmd->add_option("--root", solve.root, "root vertex (default 1)");
  solve_cmd->add_flag("--witness", solve.witness, "print one minimum set");
  solve_cmd->add_flag("--count", solve.count, "print the number of minimum sets");
  solve_cmd->add_flag("--json", solve.as_json, "single JSON document on stdout");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list minimum [1,2]-sets");
  enumerate_cmd->add_option("file", enumerate.file, "edge-list file")->required();
  enumerate_cmd->add_option("--limit", enumerate.limit, "maximum number of sets printed");
  enumerate_cmd->add_option("--root", enumerate.root, "root vertex (default 1)");
  enumerate_cmd->add_flag("--json", enumerate.as_json, "single JSON document on stdout");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "validate a vertex set");
  check_cmd->add_option("file", check.file, "edge-list file")->required();
  check_cmd->add_option("--set", check.set, "comma-separated vertex ids")->required();
  check_cmd->add_option("--mode", check.mode, "12 | ab | total12 | totalab");
  check_cmd->add_option("--a", check.a, "lower bound");
  check_cmd->add_option("--b", check.b, "upper bound");
  check_cmd->add_flag("--json", check.as_json, "single JSON document on stdout");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum and count");
  oracle_cmd->add_option("file", oracle.file, "edge-list file")->required();
  oracle_cmd->add_option("--mode", oracle.mode, "12 | ab | total12 | totalab");
  oracle_cmd->add_option("--a", oracle.a, "lower bound");
  oracle_cmd->add_option("--b", oracle.b, "upper bound");
  oracle_cmd->add_option("--limit", oracle.limit, "also list up to this many minimum sets");
  oracle_cmd->add_flag("--json", oracle.as_json, "single JSON document on stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "compare the solvers with the oracle");
  verify_cmd->add_option("--max-n", verify.max_n, "largest tree size");
  verify_cmd->add_option("--modes", verify.modes, "e.g. 12,total12,ab:1:1,totalab:2:3");
  verify_cmd->add_option("--samples", verify.samples, "extra random trees of size max-n");
  verify_cmd->add_option("--seed", verify.seed, "seed for the random samples");
  verify_cmd->add_flag("--json", verify.as_json, "single JSON document on stdout");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "all trees with total [1,2]-sets");
  generate_cmd->add_option("--max-n", gen.max_n, "largest tree size");
  generate_cmd->add_flag("--trace", gen.trace, "print the rule sequence");
  generate_cmd->add_flag("--json", gen.as_json, "single JSON document on stdout");

  RandomTreeArgs rt;
  auto* random_cmd = app.add_subcommand("random-tree", "uniform random labeled tree");
  random_cmd->add_option("--n", rt.n, "vertex count");
  random_cmd->add_option("--seed", rt.seed, "generator seed");
  random_cmd->add_flag("--json", rt.as_json, "single JSON document on stdout");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time the solvers on random trees");
  bench_cmd->add_option("--sizes", bench.sizes, "tree sizes")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--b-values", bench.b_values, "b values for the solve_ab sweep")->delimiter(',');
  bench_cmd->add_option("--b-n", bench.b_n, "tree size for the b sweep (0 skips it)");
  bench_cmd->add_option("--repeats", bench.repeats, "best of this many runs");
  bench_cmd->add_flag("--json", bench.as_json, "single JSON document on stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*enumerate_cmd) return cmd_enumerate(enumerate, out);
    if (*check_cmd) return cmd_check(check, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*generate_cmd) return cmd_generate(gen, out);
    if (*random_cmd) return cmd_random_tree(rt, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace onetwo::cli
