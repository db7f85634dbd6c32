// mpconv: generate, solve, reduce, cross-check and benchmark instances of the
// (max,+)-convolution problem family.
//
// Exit codes: 0 success, 1 input error, 2 disagreement with the reference
// method under --check (or a failed crosscheck).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpconv/harness.hpp"
#include "mpconv/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagree = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw mpconv::InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw mpconv::InvalidInput("cannot write " + path);
  out << text;
}

std::string dump(const nlohmann::json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

void add_problem_option(CLI::App* cmd, std::string& problem) {
  std::vector<std::string> tags;
  for (const auto tag : mpconv::kAllProblems) {
    tags.emplace_back(mpconv::to_string(tag));
  }
  cmd->add_option("--problem,-p", problem, "Problem tag")
      ->required()
      ->check(CLI::IsMember(tags));
}

void add_solver_options(CLI::App* cmd, mpconv::SolveOptions& opts) {
  cmd->add_option("--delta", opts.delta, "Failure probability for rand")
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "Seed for randomized methods")
      ->capture_default_str();
  cmd->add_option("--kernel", opts.kernel, "Convolution kernel (naive, blocked)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(max,+)-convolution problem family: solvers, reductions, checks"};
  app.require_subcommand(1);

  // gen
  std::string gen_problem;
  mpconv::GenParams gen_params;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  bool gen_pretty = false;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  add_problem_option(gen, gen_problem);
  gen->add_option("--n,-n", gen_params.n, "Instance size")->capture_default_str();
  gen->add_option("--value-bound,-W", gen_params.value_bound,
                  "Magnitude bound (circle length for necklace)")
      ->capture_default_str();
  gen->add_option("--capacity,-t", gen_params.capacity,
                  "Knapsack capacity (0: 2n)")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--output,-o", gen_output, "Output file (default stdout)");
  gen->add_flag("--json", gen_pretty, "Pretty-print the instance");

  // solve
  std::string solve_input;
  std::string solve_method;
  mpconv::SolveOptions solve_opts;
  bool solve_check = false;
  bool solve_pretty = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--input,-i", solve_input, "Instance file ('-' for stdin)")
      ->required();
  solve->add_option("--method,-m", solve_method,
                    "Method (default: the problem's reference method)");
  solve->add_flag("--check", solve_check,
                  "Compare with the reference method; exit 2 on disagreement");
  add_solver_options(solve, solve_opts);
  solve->add_flag("--json", solve_pretty, "Pretty-print the report");

  // reduce
  std::string reduce_input;
  std::string reduce_method;
  bool reduce_pretty = false;
  auto* reduce = app.add_subcommand(
      "reduce", "Print the target instances of one reduction step");
  reduce->add_option("--input,-i", reduce_input, "Instance file")->required();
  reduce->add_option("--method,-m", reduce_method, "Reduction method")->required();
  reduce->add_flag("--json", reduce_pretty, "Pretty-print");

  // crosscheck
  std::string cc_problem;
  std::size_t cc_trials = 100;
  mpconv::GenParams cc_params;
  std::uint64_t cc_seed = 0;
  mpconv::SolveOptions cc_opts;
  bool cc_json = false;
  auto* cc = app.add_subcommand(
      "crosscheck", "Run every method on seeded instances and count disagreements");
  add_problem_option(cc, cc_problem);
  cc->add_option("--trials", cc_trials, "Number of instances")->capture_default_str();
  cc->add_option("--n,-n", cc_params.n, "Largest instance size")
      ->capture_default_str();
  cc->add_option("--value-bound,-W", cc_params.value_bound, "Magnitude bound")
      ->capture_default_str();
  cc->add_option("--capacity,-t", cc_params.capacity,
                 "Largest knapsack capacity (0: 2n)")
      ->capture_default_str();
  cc->add_option("--instance-seed", cc_seed, "Seed for instance generation")
      ->capture_default_str();
  add_solver_options(cc, cc_opts);
  cc->add_flag("--json", cc_json, "Print the summary as JSON");

  // bench
  std::string bench_problem;
  std::string bench_method;
  std::vector<std::size_t> bench_sizes{16, 32, 64, 128};
  std::string bench_sweep = "n";
  mpconv::GenParams bench_params;
  std::uint64_t bench_seed = 0;
  std::size_t bench_repeats = 5;
  mpconv::SolveOptions bench_opts;
  std::string bench_output;
  auto* bench = app.add_subcommand("bench", "Time a method over a size sweep (CSV)");
  add_problem_option(bench, bench_problem);
  bench->add_option("--method,-m", bench_method, "Method")->required();
  bench->add_option("--sizes", bench_sizes, "Strictly increasing sizes")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--sweep", bench_sweep, "Swept parameter: n or t")
      ->check(CLI::IsMember({"n", "t"}))
      ->capture_default_str();
  bench->add_option("--n,-n", bench_params.n, "Fixed n when sweeping t")
      ->capture_default_str();
  bench->add_option("--value-bound,-W", bench_params.value_bound, "Magnitude bound")
      ->capture_default_str();
  bench->add_option("--capacity,-t", bench_params.capacity,
                    "Fixed capacity when sweeping n (0: 2n)")
      ->capture_default_str();
  bench->add_option("--instance-seed", bench_seed, "Seed for instance generation")
      ->capture_default_str();
  bench->add_option("--repeats", bench_repeats, "Runs per size (median reported)")
      ->capture_default_str();
  add_solver_options(bench, bench_opts);
  bench->add_option("--output,-o", bench_output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      const auto file =
          mpconv::generate(mpconv::parse_problem_tag(gen_problem), gen_params, gen_seed);
      write_output(gen_output, dump(mpconv::to_json(file), gen_pretty));
      return kExitOk;
    }
    if (*solve) {
      const auto file = mpconv::parse_instance(read_input(solve_input));
      const std::string method =
          solve_method.empty()
              ? std::string(mpconv::methods_for(file.problem).front().name)
              : solve_method;
      const auto report = mpconv::solve(file, method, solve_opts, solve_check);
      std::cout << dump(report.to_json(), solve_pretty);
      return report.check_failed(file.problem) ? kExitDisagree : kExitOk;
    }
    if (*reduce) {
      const auto file = mpconv::parse_instance(read_input(reduce_input));
      std::cout << dump(mpconv::reduce_to_json(file, reduce_method), reduce_pretty);
      return kExitOk;
    }
    if (*cc) {
      const auto report = mpconv::crosscheck(mpconv::parse_problem_tag(cc_problem),
                                             cc_trials, cc_params, cc_seed, cc_opts);
      if (cc_json) {
        std::cout << dump(report.to_json(), true);
      } else {
        std::cout << cc_problem << ": " << cc_trials << " trials, n <= "
                  << cc_params.n << ", |v| <= " << cc_params.value_bound << '\n';
        for (const auto& m : report.methods) {
          std::cout << "  " << m.method << ": " << m.disagreements << '/'
                    << m.runs << " disagreements";
          if (m.randomized) std::cout << ", " << m.unsound << " unsound";
          std::cout << '\n';
        }
        std::cout << (report.ok() ? "OK" : "FAILED") << '\n';
      }
      return report.ok() ? kExitOk : kExitDisagree;
    }
    if (*bench) {
      const auto sweep =
          bench_sweep == "n" ? mpconv::SweepParam::kN : mpconv::SweepParam::kCapacity;
      write_output(bench_output,
                   mpconv::bench_csv(mpconv::parse_problem_tag(bench_problem),
                                     bench_method, bench_sizes, sweep, bench_params,
                                     bench_seed, bench_opts, bench_repeats));
      return kExitOk;
    }
  } catch (const mpconv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
