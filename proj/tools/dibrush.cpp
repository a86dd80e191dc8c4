#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dibrush/bounds.hpp"
#include "dibrush/error.hpp"
#include "dibrush/families.hpp"
#include "dibrush/io.hpp"
#include "dibrush/serialize.hpp"
#include "dibrush/solver.hpp"
#include "dibrush/strategies.hpp"
#include "dibrush/verify.hpp"

namespace {

using namespace dibrush;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DIBRUSH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("DIBRUSH_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

struct GenArgs {
  std::string family;
  int n = 0;
  std::vector<int> symbols;
  double p = 0.3;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  Digraph g;
  if (a.family == "tt") {
    g = transitive_tournament(a.n);
  } else if (a.family == "complete") {
    g = complete_digraph(a.n);
  } else if (a.family == "rotational") {
    std::vector<int> symbols = a.symbols;
    if (symbols.empty()) {
      for (int s = 1; s <= (a.n - 1) / 2; ++s) symbols.push_back(s);
    }
    g = rotational_tournament(a.n, symbols);
  } else if (a.family == "tree") {
    g = random_rooted_tree(a.n, a.seed);
  } else {
    g = random_dag(a.n, a.p, a.seed);
  }
  emit(serialize_edge_list(g), a.out);
  return 0;
}

struct SolveArgs {
  std::string file;
  bool exact = false;
  bool bounds_only = false;
  bool topo_only = false;
  int jobs = 1;
  int cap = kDefaultSolverCap;
  bool json = false;
};

void print_plan_text(const BrushPlan& plan) {
  auto join = [](const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
  };
  std::cout << "initial: " << join(plan.initial) << "\n";
  std::cout << "order:   " << join(plan.order) << "\n";
}

int cmd_solve(const SolveArgs& a) {
  const Digraph g = read_edge_list_file(a.file);
  if (a.bounds_only) {
    std::cout << to_json(bound_report(g)).dump(2) << "\n";
    return 0;
  }
  SolveOptions opts;
  opts.topo_only = a.topo_only;
  opts.workers = a.jobs;
  opts.cap = a.cap;
  SolveResult r;
  try {
    r = brushing_number_exact(g, opts);
  } catch (const TooLarge&) {
    std::cerr << "hint: rerun with --bounds-only for lower and upper bounds\n";
    throw;
  }
  if (a.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "B = " << r.value << "\n";
    print_plan_text(r.witness);
    std::cout << "orders explored: " << r.stats.orders_explored << ", pruned: " << r.stats.pruned
              << ", lower bound: " << r.stats.lower_bound_used << "\n";
  }
  return 0;
}

int cmd_strategy(const std::string& file, const std::string& method_name_arg) {
  const Digraph g = read_edge_list_file(file);
  const auto method = parse_method(method_name_arg);
  if (!method) throw UsageError("unknown method " + method_name_arg);
  const StrategyResult r = apply_strategy(g, *method);
  Json doc = to_json(r.plan);
  doc["method"] = method_name(r.method);
  doc["total"] = r.total;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_simulate(const std::string& file, const std::string& plan_path,
                 const std::string& trace_path, const std::string& dot_dir) {
  const Digraph g = read_edge_list_file(file);
  const BrushPlan plan = parse_plan(read_text_file(plan_path));
  const CleaningTrace trace = run(g, plan);
  emit(to_json(trace).dump(2) + "\n", trace_path);
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    for (const TraceStep& step : trace.steps) {
      const auto path = std::filesystem::path(dot_dir) / ("step_" + std::to_string(step.t) + ".dot");
      write_text_file(path.string(), export_dot(g, &step));
    }
  }
  return 0;
}

int cmd_bounds(const std::string& file) {
  std::cout << to_json(bound_report(read_edge_list_file(file))).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite_name, int max_n, std::uint64_t seed, int jobs) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw UsageError("unknown suite " + suite_name);
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.seed = seed;
  opts.workers = jobs;
  const std::vector<VerifyRow> rows = run_suite(*suite, opts);
  std::size_t width = 4;
  for (const VerifyRow& r : rows) width = std::max(width, r.name.size());
  int failed = 0;
  for (const VerifyRow& r : rows) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ')
              << "expected " << r.expected << "  computed " << r.computed << "\n";
    failed += r.pass ? 0 : 1;
  }
  std::cout << rows.size() - failed << "/" << rows.size() << " passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_conjecture(const std::vector<int>& ns, int jobs) {
  SolveOptions opts;
  opts.workers = jobs;
  Json out = Json::array();
  for (int n : ns) {
    const ConjectureReport r = conjecture_explorer(n, opts);
    if (!r.holds) {
      std::cerr << "WARNING: n=" << n << " has a regular tournament with B=" << r.max_value
                << " above the conjectured bound " << r.bound << "\n";
    }
    out.push_back(to_json(r));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brushing numbers of directed graphs"};
  app.require_subcommand(1);
  int result = 0;

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  GenArgs gen;
  gen.seed = seed;
  auto* gen_cmd = app.add_subcommand("gen", "Write the edge list of a generated digraph");
  gen_cmd->add_option("--family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"tt", "complete", "rotational", "tree", "random-dag"}));
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--symbols", gen.symbols, "Rotational symbol set")->delimiter(',');
  gen_cmd->add_option("--p", gen.p, "Arc probability for random-dag")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families (default DIBRUSH_SEED or 1)");
  gen_cmd->add_option("--out", gen.out, "Output file (stdout when absent)");
  gen_cmd->callback([&] { result = cmd_gen(gen); });

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact brushing number or bounds");
  solve_cmd->add_option("file", solve.file, "Edge-list file")->required();
  auto* exact_flag = solve_cmd->add_flag("--exact", solve.exact, "Exact search (default)");
  solve_cmd->add_flag("--bounds-only", solve.bounds_only, "Only report bounds")->excludes(exact_flag);
  solve_cmd->add_flag("--topo-only", solve.topo_only, "Search topological orders only");
  solve_cmd->add_option("--jobs", solve.jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--cap", solve.cap, "Largest n to solve exactly")->check(CLI::Range(0, kHardSolverCap));
  solve_cmd->add_flag("--json", solve.json, "JSON output");
  solve_cmd->callback([&] { result = cmd_solve(solve); });

  std::string strategy_file;
  std::string method = "auto";
  auto* strategy_cmd = app.add_subcommand("strategy", "Constructive cleaning plan");
  strategy_cmd->add_option("file", strategy_file, "Edge-list file")->required();
  strategy_cmd->add_option("--method", method, "Strategy")
      ->check(CLI::IsMember({"auto", "tt", "tt-minus-arc", "complete", "rotational", "tree",
                             "dag-recursive", "path-decomp"}));
  strategy_cmd->callback([&] { result = cmd_strategy(strategy_file, method); });

  std::string sim_file, plan_path, trace_path, dot_dir;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a plan and record the trace");
  sim_cmd->add_option("file", sim_file, "Edge-list file")->required();
  sim_cmd->add_option("--plan", plan_path, "Plan JSON")->required();
  sim_cmd->add_option("--trace", trace_path, "Trace JSON output (stdout when absent)");
  sim_cmd->add_option("--dot-dir", dot_dir, "Directory for step_<t>.dot files");
  sim_cmd->callback([&] { result = cmd_simulate(sim_file, plan_path, trace_path, dot_dir); });

  std::string bounds_file;
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds");
  bounds_cmd->add_option("file", bounds_file, "Edge-list file")->required();
  bounds_cmd->callback([&] { result = cmd_bounds(bounds_file); });

  std::string suite = "theorems";
  int max_n = 7;
  int verify_jobs = 1;
  std::uint64_t verify_seed = seed;
  auto* verify_cmd = app.add_subcommand("verify", "Check suites with a pass/fail table");
  verify_cmd->add_option("--suite", suite, "theorems, oracle or transpose")
      ->check(CLI::IsMember({"theorems", "oracle", "transpose"}));
  verify_cmd->add_option("--max-n", max_n, "Largest instance size")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "Seed for random instances");
  verify_cmd->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->callback([&] { result = cmd_verify(suite, max_n, verify_seed, verify_jobs); });

  std::vector<int> conj_n{3, 5};
  int conj_jobs = 1;
  auto* conj_cmd = app.add_subcommand("conjecture", "Regular tournaments against the conjectured bound");
  conj_cmd->add_option("--n", conj_n, "Odd orders, comma separated")->delimiter(',');
  conj_cmd->add_option("--jobs", conj_jobs, "Worker threads")->check(CLI::PositiveNumber);
  conj_cmd->callback([&] { result = cmd_conjecture(conj_n, conj_jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return result;
}
