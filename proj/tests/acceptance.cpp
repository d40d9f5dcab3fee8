// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lop/constructives.hpp"
#include "lop/generators.hpp"
#include "lop/harness.hpp"
#include "lop/solvers.hpp"
#include "lop/spectral.hpp"

using namespace lop;

namespace {

constexpr double kRel = 1e-9;
constexpr std::uint64_t kSeed = 20240601;

double residual(double x, double y) { return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}); }

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    visit(Permutation(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

RngSeed seed(std::uint64_t criterion, std::uint64_t n, std::uint64_t s) { return RngSeed(kSeed, {criterion, n, s}); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome polynomial_solver() {
  double worst = 0.0;
  int cases = 0;
  for (int n = 4; n <= 8; ++n) {
    for (int s = 0; s < 100; ++s) {
      const LopInstance inst = gen_p_component(n, seed(1, n, s));
      worst = std::max(worst, residual(evaluate(inst, solve_p_exact(inst)), solve_exhaustive(inst).f_max));
      ++cases;
    }
  }
  return {worst <= kRel, std::to_string(cases) + " instances, max rel residual " + fmt("%.3g", worst)};
}

Outcome generator_validity() {
  int p_ok = 0, np_ok = 0, total = 0;
  for (int n : {5, 8, 10}) {
    for (int s = 0; s < 100; ++s) {
      p_ok += is_p_component(gen_p_component(n, seed(2, n, s))) ? 1 : 0;
      np_ok += is_np_component(gen_np_component(n, seed(2, n, 1000 + s))) ? 1 : 0;
      ++total;
    }
  }
  return {p_ok == total && np_ok == total,
          "P " + std::to_string(p_ok) + "/" + std::to_string(total) + ", NP " + std::to_string(np_ok) + "/" +
              std::to_string(total)};
}

Outcome reconstruction() {
  double worst = 0.0;
  long cases = 0;
  for (int n = 4; n <= 7; ++n) {
    for (int s = 0; s < 20; ++s) {
      const LopInstance inst = gen_p_component(n, seed(3, n, s));
      const FirstOrderModel model(inst);
      for_each_permutation(n, [&](const Permutation& p) {
        worst = std::max(worst, residual(model(p), evaluate(inst, p)));
        ++cases;
      });
      const Permutation id = Permutation::identity(n);
      worst = std::max(worst, residual(reconstruct_first_order(inst, id), evaluate(inst, id)));
    }
  }
  return {worst <= kRel, std::to_string(cases) + " permutations, max rel residual " + fmt("%.3g", worst)};
}

Outcome np_marginals() {
  double worst_marginal = 0.0, worst_cyclic = 0.0;
  for (int n = 4; n <= 7; ++n) {
    for (int s = 0; s < 20; ++s) {
      const LopInstance inst = gen_np_component(n, seed(4, n, s));
      double total = 0.0;
      for_each_permutation(n, [&](const Permutation& p) {
        const double f = evaluate(inst, p);
        total += f;
        worst_cyclic = std::max(worst_cyclic, residual(f, evaluate(inst, cyclic_shift(p))));
      });
      const Eigen::MatrixXd m = marginal_matrix(inst);
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) worst_marginal = std::max(worst_marginal, residual(m(k, j), total / n));
      }
    }
  }
  return {worst_marginal <= kRel && worst_cyclic <= kRel,
          "max rel residual marginals " + fmt("%.3g", worst_marginal) + ", cyclic " + fmt("%.3g", worst_cyclic)};
}

Outcome swap_identity() {
  double worst = 0.0;
  long cases = 0;
  for (int n = 5; n <= 8; ++n) {
    for (int s = 0; s < 20; ++s) {
      const LopInstance inst = gen_p_component(n, seed(5, n, s));
      Rng rng(seed(5, n, 1000 + s));
      for (int t = 0; t < 1000; ++t) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(std::span<int>(order));
        const Permutation p(order);
        int i = rng.below(n), j = rng.below(n - 1);
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        const double lhs = evaluate(inst, p) - evaluate(inst, swap_positions(p, i, j));
        const double rhs = (j - i) * (inst(p[i], p[j]) - inst(p[j], p[i]));
        worst = std::max(worst, residual(lhs, rhs));
        ++cases;
      }
    }
  }
  return {worst <= kRel, std::to_string(cases) + " triples, max rel residual " + fmt("%.3g", worst)};
}

Outcome lift_correspondence() {
  int instances = 0, mismatches = 0;
  for (int m = 3; m <= 6; ++m) {
    for (int s = 0; s < 50; ++s) {
      const LopInstance base = gen_uniform(m, seed(6, m, s));
      const LopInstance lifted = lift_np(base);
      std::vector<std::pair<double, Permutation>> base_values, lifted_values;
      double best_base = -INFINITY, best_lift = -INFINITY;
      for_each_permutation(m, [&](const Permutation& p) {
        base_values.emplace_back(evaluate(base, p), p);
        best_base = std::max(best_base, base_values.back().first);
      });
      for_each_permutation(m + 1, [&](const Permutation& p) {
        lifted_values.emplace_back(evaluate(lifted, p), p);
        best_lift = std::max(best_lift, lifted_values.back().first);
      });
      std::vector<std::vector<int>> from_base, from_lift;
      for (const auto& [f, p] : base_values) {
        if (residual(f, best_base) <= kRel) {
          std::vector<int> ext(p.begin(), p.end());
          ext.push_back(m);
          from_base.push_back(ext);
        }
      }
      for (const auto& [f, p] : lifted_values) {
        if (residual(f, best_lift) <= kRel && p[m] == m) from_lift.emplace_back(p.begin(), p.end());
      }
      std::sort(from_base.begin(), from_base.end());
      std::sort(from_lift.begin(), from_lift.end());
      if (from_base != from_lift || !is_np_component(lifted)) ++mismatches;
      ++instances;
    }
  }
  return {mismatches == 0, std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatched"};
}

Outcome split_round_trip() {
  long entries = 0, inexact = 0;
  int invalid = 0;
  double worst_f = 0.0, worst_ulps = 0.0;
  for (int n = 2; n <= 7; ++n) {
    for (int s = 0; s < 20; ++s) {
      const LopInstance inst = gen_uniform(n, seed(7, n, s));
      const ComponentPair parts = split(inst);
      const Eigen::MatrixXd& b = parts.p_part().matrix();
      const Eigen::MatrixXd& c = parts.np_part().matrix();
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          ++entries;
          const double sum = b(i, j) + c(i, j);
          if (sum != inst(i, j)) {
            ++inexact;
            const double ulp = std::ldexp(std::numeric_limits<double>::epsilon(),
                                          std::ilogb(std::max({std::abs(b(i, j)), std::abs(c(i, j))})));
            worst_ulps = std::max(worst_ulps, std::abs(sum - inst(i, j)) / ulp);
          }
        }
      }
      if (!is_p_component(parts.p_part()) || !is_np_component(parts.np_part())) ++invalid;
      for_each_permutation(n, [&](const Permutation& p) {
        worst_f = std::max(worst_f, residual(evaluate(inst, p), evaluate(parts.p_part(), p) + evaluate(parts.np_part(), p)));
      });
    }
  }
  // Off-grid inputs for the record: epsilon-composed instances.
  long composed_entries = 0, composed_inexact = 0;
  double composed_ulps = 0.0;
  for (int n = 2; n <= 7; ++n) {
    for (int s = 0; s < 20; ++s) {
      const LopInstance inst = compose(gen_component_pair(n, seed(7, n, 100 + s).derive()), 0.37 * (s + 1));
      const ComponentPair parts = split(inst);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double b = parts.p_part()(i, j), c = parts.np_part()(i, j);
          ++composed_entries;
          if (b + c != inst(i, j)) {
            ++composed_inexact;
            const double ulp = std::ldexp(std::numeric_limits<double>::epsilon(),
                                          std::ilogb(std::max(std::abs(b), std::abs(c))));
            composed_ulps = std::max(composed_ulps, std::abs(b + c - inst(i, j)) / ulp);
          }
        }
      }
    }
  }
  std::printf("     7 note: composed inputs re-sum exactly on %ld/%ld entries, rest within %.2g ulp of the larger part\n",
              composed_entries - composed_inexact, composed_entries, composed_ulps);

  std::string detail = std::to_string(entries - inexact) + "/" + std::to_string(entries) +
                       " uniform-instance entries re-sum exactly, " + std::to_string(invalid) + " invalid components, max f residual " +
                       fmt("%.3g", worst_f);
  if (inexact > 0) detail += " (worst " + fmt("%.2g", worst_ulps) + " ulp)";
  return {inexact == 0 && invalid == 0 && worst_f <= kRel, detail};
}

std::vector<ErrorRecord> table_records;

Outcome table_trend() {
  ExperimentConfig config;
  config.dims = {10};
  config.reps = 20;
  config.master_seed = 42;
  config.parallel_workers = std::max(1u, std::thread::hardware_concurrency());
  table_records = run_experiment(config);
  const auto rows = aggregate(table_records);
  const auto& grid = config.epsilons;
  const AggregateRow& zero = rows.front();
  const AggregateRow& top = rows.back();

  bool ok = true;
  std::string detail;
  auto need = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += " [missed: " + what + "]";
    }
  };
  // kAlgorithms order: BECKER, SS, S, CM.
  need(zero.mean_error[1] <= kRel && zero.mean_error[2] <= kRel && zero.mean_error[3] <= kRel, "eps=0 SS/S/CM zero");
  need(zero.mean_error[0] <= 0.01, "eps=0 Becker <= 0.01");
  need(top.mean_error[3] >= 0.40 && top.mean_error[3] <= 0.60, "top CM in [0.40, 0.60]");
  need(top.mean_error[0] >= 0.03 && top.mean_error[0] <= 0.15, "top Becker in [0.03, 0.15]");
  need(top.mean_error[1] >= 0.03 && top.mean_error[1] <= 0.15, "top SS in [0.03, 0.15]");
  need(top.mean_error[2] >= 0.02 && top.mean_error[2] <= 0.12, "top S in [0.02, 0.12]");
  for (std::size_t k = 0; k < 4; ++k) {
    double lo = 0.0, hi = 0.0;
    int nlo = 0, nhi = 0;
    for (std::size_t e = 0; e < rows.size(); ++e) {
      if (grid[e] <= 0.1) {
        lo += rows[e].mean_error[k];
        ++nlo;
      }
      if (grid[e] >= 10.0) {
        hi += rows[e].mean_error[k];
        ++nhi;
      }
    }
    need(hi / nhi > lo / nlo, std::string(algorithm_name(kAlgorithms[k])) + " degrades");
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "eps=0 B/SS/S/CM %.4f/%.4f/%.4f/%.4f; eps=%.3f B/SS/S/CM %.3f/%.3f/%.3f/%.3f", zero.mean_error[0],
                zero.mean_error[1], zero.mean_error[2], zero.mean_error[3], top.epsilon, top.mean_error[0],
                top.mean_error[1], top.mean_error[2], top.mean_error[3]);
  return {ok, buf + detail};
}

Outcome cm_sorting() {
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const int n = 2 + s % 9;
    const LopInstance inst = gen_uniform(n, seed(9, n, s));
    const Eigen::VectorXd v = net_flow(inst);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return v(x) > v(y); });
    worst = std::max(worst, residual(evaluate(inst, construct_cm(inst)), evaluate(inst, Permutation(order))));
  }
  return {worst <= kRel, "100 instances n = 2..10, max rel residual " + fmt("%.3g", worst)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "lop_acceptance_determinism";
  fs::remove_all(root);
  ExperimentConfig config;
  config.dims = {10};
  config.reps = 20;
  config.master_seed = 42;
  config.parallel_workers = 1;
  const auto rerun = run_experiment(config);
  write_experiment_outputs(root / "a", table_records);
  write_experiment_outputs(root / "b", rerun);
  const std::string a = slurp(root / "a" / "records.csv");
  const std::string b = slurp(root / "b" / "records.csv");
  const bool same = !a.empty() && a == b && slurp(root / "a" / "aggregate.csv") == slurp(root / "b" / "aggregate.csv");
  fs::remove_all(root);
  return {same, std::to_string(a.size()) + " bytes of raw CSV, " + (same ? "identical" : "different") +
                    " across reruns (" +
                    std::to_string(std::max(1u, std::thread::hardware_concurrency())) + " workers vs 1)"};
}

}  // namespace

int main() {
  report(1, "polynomial solver matches exhaustive optimum", polynomial_solver);
  report(2, "generated components pass their validators", generator_validity);
  report(3, "first-order reconstruction on P components", reconstruction);
  report(4, "NP components: uniform marginals, cyclic invariance", np_marginals);
  report(5, "swap identity on P components", swap_identity);
  report(6, "lift optimum correspondence", lift_correspondence);
  report(7, "split round trip", split_round_trip);
  report(8, "error trend at n = 10, 20 reps, default grid", table_trend);
  report(9, "CM equals sorting by net flow", cm_sorting);
  report(10, "determinism of raw records", determinism);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
