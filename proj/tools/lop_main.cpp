// lop: command-line front end.
//
//   lop generate --type p|np|uniform --n N --seed S [--out FILE]
//   lop solve (--exact | --poly) FILE
//   lop construct --algo becker|ss|s|cm FILE
//   lop experiment [--dims 10,11] [--reps 20] [--eps-grid a,b,... | --eps-default]
//                  [--seed S] [--out-dir DIR] [--workers W] [--limit N]
//   lop verify [--max-n N] [--samples K] [--negative-control]
//
// Exit codes: 0 success, 2 invalid arguments, 3 resource limit,
// 4 verification failure, 1 anything else (I/O).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lop/constructives.hpp"
#include "lop/generators.hpp"
#include "lop/harness.hpp"
#include "lop/io.hpp"
#include "lop/solvers.hpp"

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kInvalid = 2, kResource = 3, kVerifyFailed = 4 };

void print_solution(const std::string& label, const lop::Permutation& perm, double value) {
  std::cout << label << ' ' << lop::to_string(perm) << ' ' << lop::format_real(value) << '\n';
}

void print_table(std::span<const lop::AggregateRow> rows) {
  std::printf("%4s %10s %8s %8s %8s %8s\n", "n", "epsilon", "Becker", "SS", "S", "CM");
  for (const auto& r : rows) {
    std::printf("%4d %10.3f %8.3f %8.3f %8.3f %8.3f\n", r.n, r.epsilon, r.mean_error[0], r.mean_error[1],
                r.mean_error[2], r.mean_error[3]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear Ordering Problem toolkit: P / NP-hard components, constructives, exact solvers"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  std::string gen_type = "p";
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--type", gen_type, "p | np | uniform")->check(CLI::IsMember({"p", "np", "uniform"}));
  gen->add_option("--n", gen_n, "Dimension")->required()->check(CLI::Range(2, 100000));
  gen->add_option("--seed", gen_seed, "Master seed");
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  bool solve_exact = false, solve_poly = false;
  std::string solve_file;
  int solve_limit = 11;
  auto* exact_flag = solve->add_flag("--exact", solve_exact, "Exhaustive enumeration (global max and min)");
  auto* poly_flag = solve->add_flag("--poly", solve_poly, "Polynomial algorithm (P-component instances only)");
  exact_flag->excludes(poly_flag);
  solve->add_option("--limit", solve_limit, "Enumeration limit for --exact");
  solve->add_option("instance", solve_file, "Instance file")->required();

  // construct
  auto* cons = app.add_subcommand("construct", "Run a constructive heuristic");
  std::string cons_algo = "cm";
  std::string cons_file;
  cons->add_option("--algo", cons_algo, "becker | ss | s | cm")
      ->check(CLI::IsMember({"becker", "ss", "s", "cm"}, CLI::ignore_case));
  cons->add_option("instance", cons_file, "Instance file")->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run the epsilon sweep experiment");
  lop::ExperimentConfig config;
  std::vector<double> eps_grid;
  bool eps_default = false;
  exp->add_option("--dims", config.dims, "Dimensions")->delimiter(',');
  exp->add_option("--reps", config.reps, "Repetitions per dimension");
  auto* grid_opt = exp->add_option("--eps-grid", eps_grid, "Comma-separated epsilon values")->delimiter(',');
  auto* default_flag = exp->add_flag("--eps-default", eps_default, "Default 20-value grid (0, 10^-2 .. 10^2.5)");
  grid_opt->excludes(default_flag);
  exp->add_option("--seed", config.master_seed, "Master seed");
  std::string out_dir = "results";
  exp->add_option("--out-dir", out_dir, "Output directory");
  exp->add_option("--workers", config.parallel_workers, "Parallel workers");
  exp->add_option("--limit", config.enumeration_limit, "Enumeration limit (max n)");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the property suites at small n");
  lop::VerifyOptions vopts;
  ver->add_option("--max-n", vopts.max_n, "Largest dimension (3..8)");
  ver->add_option("--samples", vopts.samples, "Instances per dimension");
  ver->add_option("--seed", vopts.seed, "Seed");
  ver->add_flag("--negative-control", vopts.corrupt_p_component, "Corrupt P instances; the P suite must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (gen->parsed()) {
      const auto kind = lop::parse_instance_kind(gen_type);
      const lop::RngSeed seed(gen_seed);
      const lop::LopInstance inst = lop::generate(kind, gen_n, seed);
      const std::vector<std::string> meta{"n=" + std::to_string(gen_n) + " type=" + gen_type +
                                          " seed=" + std::to_string(gen_seed)};
      if (gen_out.empty()) {
        lop::write_instance(std::cout, inst, meta);
      } else {
        lop::save_instance(gen_out, inst, meta);
      }
    } else if (solve->parsed()) {
      const lop::LopInstance inst = lop::load_instance(solve_file);
      if (solve_poly) {
        const lop::Permutation p = lop::solve_p_exact(inst);
        print_solution("best", p, lop::evaluate(inst, p));
      } else {
        lop::ExhaustiveOptions opts;
        opts.enumeration_limit = solve_limit;
        const lop::ExactResult r = lop::solve_exhaustive(inst, opts);
        print_solution("best", r.best, r.f_max);
        print_solution("worst", r.worst, r.f_min);
      }
    } else if (cons->parsed()) {
      const lop::LopInstance inst = lop::load_instance(cons_file);
      const lop::Permutation p = lop::run_constructive(lop::parse_algorithm(cons_algo), inst);
      print_solution(std::string(lop::algorithm_name(lop::parse_algorithm(cons_algo))), p, lop::evaluate(inst, p));
    } else if (exp->parsed()) {
      if (!eps_grid.empty()) config.epsilons = eps_grid;
      config.out_dir = out_dir;
      const auto records = lop::run_experiment(config);
      lop::write_experiment_outputs(config.out_dir, records);
      print_table(lop::aggregate(records));
      std::cout << records.size() << " records written to " << config.out_dir.string() << '\n';
    } else if (ver->parsed()) {
      const lop::VerifyReport report = lop::verify(vopts);
      lop::print_report(std::cout, report);
      return report.passed() ? kOk : kVerifyFailed;
    }
  } catch (const lop::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const lop::PreconditionViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const lop::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
