#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>

#include "lop/constructives.hpp"
#include "lop/generators.hpp"
#include "lop/harness.hpp"
#include "lop/io.hpp"
#include "lop/solvers.hpp"
#include "lop/spectral.hpp"

namespace lop {

namespace {

constexpr double kRel = 1e-9;

// Scaled residual: |x - y| / max(1, |x|, |y|).
double residual(double x, double y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

// Lexicographic enumeration, independent of the plain-changes solver.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    visit(Permutation(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

class Suite {
public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Records one comparison whose scaled residual must stay within `limit`.
  void check(double violation, double limit = kRel) {
    ++result_.cases;
    result_.max_violation = std::max(result_.max_violation, violation);
    if (!(violation <= limit)) result_.passed = false;
  }
  void require(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok) {
      result_.passed = false;
      if (result_.detail.empty()) result_.detail = what;
    }
  }
  SuiteResult finish() { return std::move(result_); }

private:
  SuiteResult result_;
};

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.max_n < 3 || options.max_n > 8) throw InvalidArgument("verify: max_n must be in [3, 8]");
  if (options.samples < 1) throw InvalidArgument("verify: samples must be positive");
  const int max_n = options.max_n;
  const RngSeed root(options.seed);
  auto seed_for = [&](std::uint64_t suite, int n, int s) {
    return root.child(suite).child(static_cast<std::uint64_t>(n)).child(static_cast<std::uint64_t>(s));
  };

  VerifyReport report;

  {
    Suite suite("core: adjacent swap delta and mean value");
    for (int n = 2; n <= max_n; ++n) {
      for (int s = 0; s < options.samples; ++s) {
        const LopInstance inst = gen_uniform(n, seed_for(1, n, s));
        double sum = 0.0, count = 0.0;
        for_each_permutation(n, [&](const Permutation& p) {
          sum += evaluate(inst, p);
          count += 1.0;
          for (int k = 0; k + 1 < n; ++k) {
            const double lhs = evaluate(inst, swap_positions(p, k, k + 1)) - evaluate(inst, p);
            suite.check(residual(lhs, adjacent_swap_delta(inst, p, k)));
          }
        });
        suite.check(residual(sum / count, mean_value(inst)));
      }
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("generators: P component validity");
    for (int n = 2; n <= max_n; ++n) {
      for (int s = 0; s < options.samples; ++s) {
        LopInstance inst = gen_p_component(n, seed_for(2, n, s));
        if (options.corrupt_p_component && n >= 3) {
          Eigen::MatrixXd a = inst.matrix();
          a(0, 1) += 0.25;
          inst = LopInstance(std::move(a));
        }
        const auto c = check_p_component(inst);
        suite.check(c.max_violation, c.threshold);
      }
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("generators: NP component validity");
    for (int n = 2; n <= max_n; ++n) {
      for (int s = 0; s < options.samples; ++s) {
        const auto c = check_np_component(gen_np_component(n, seed_for(3, n, s)));
        suite.check(c.max_violation, c.threshold);
      }
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("spectral: first-order reconstruction on P instances");
    for (int n = 3; n <= std::min(max_n, 7); ++n) {
      const LopInstance inst = gen_p_component(n, seed_for(4, n, 0));
      const Eigen::MatrixXd m = marginal_matrix(inst);
      const double scale = n * std::tgamma(n - 1.0);
      for_each_permutation(n, [&](const Permutation& p) {
        double total = 0.0;
        for (int k = 0; k < n; ++k) total += m(k, p[k]);
        suite.check(residual(total / scale - (n - 2) * mean_value(inst), evaluate(inst, p)));
      });
      suite.check(residual(reconstruct_first_order(inst, Permutation::identity(n)),
                           evaluate(inst, Permutation::identity(n))));
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("spectral: NP marginal uniformity and cyclic invariance");
    for (int n = 3; n <= std::min(max_n, 7); ++n) {
      const LopInstance inst = gen_np_component(n, seed_for(5, n, 0));
      const Eigen::MatrixXd m = marginal_matrix(inst);
      double total = 0.0;
      for_each_permutation(n, [&](const Permutation& p) {
        total += evaluate(inst, p);
        suite.check(residual(evaluate(inst, p), evaluate(inst, cyclic_shift(p))));
      });
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) suite.check(residual(m(k, j), total / n));
      }
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("spectral: swap identity on P instances");
    for (int n = 3; n <= max_n; ++n) {
      const LopInstance inst = gen_p_component(n, seed_for(6, n, 0));
      for_each_permutation(n, [&](const Permutation& p) {
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            const double lhs = evaluate(inst, p) - evaluate(inst, swap_positions(p, i, j));
            const double rhs = (j - i) * (inst(p[i], p[j]) - inst(p[j], p[i]));
            suite.check(residual(lhs, rhs));
          }
        }
      });
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("spectral: split into components");
    for (int n = 2; n <= max_n; ++n) {
      for (int s = 0; s < options.samples; ++s) {
        const LopInstance inst = gen_uniform(n, seed_for(7, n, s));
        const ComponentPair parts = split(inst);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            suite.check(std::abs(parts.p_part()(i, j) + parts.np_part()(i, j) - inst(i, j)), 0.0);
          }
        }
        const auto pc = check_p_component(parts.p_part());
        const auto nc = check_np_component(parts.np_part());
        suite.check(pc.max_violation, pc.threshold);
        suite.check(nc.max_violation, nc.threshold);
        if (n <= 6) {
          for_each_permutation(n, [&](const Permutation& p) {
            suite.check(residual(evaluate(inst, p), evaluate(parts.p_part(), p) + evaluate(parts.np_part(), p)));
          });
        }
      }
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("spectral: lift optimum correspondence");
    for (int m = 3; m + 1 <= max_n && m <= 6; ++m) {
      const LopInstance base = gen_uniform(m, seed_for(8, m, 0));
      const LopInstance lifted = lift_np(base);
      const auto nc = check_np_component(lifted);
      suite.check(nc.max_violation, nc.threshold);
      double best_base = -INFINITY;
      for_each_permutation(m, [&](const Permutation& p) { best_base = std::max(best_base, evaluate(base, p)); });
      double best_lift = -INFINITY;
      for_each_permutation(m + 1, [&](const Permutation& p) { best_lift = std::max(best_lift, evaluate(lifted, p)); });
      suite.check(residual(best_base, best_lift));
      for_each_permutation(m, [&](const Permutation& p) {
        std::vector<int> ext(p.begin(), p.end());
        ext.push_back(m);
        const bool base_opt = residual(evaluate(base, p), best_base) <= kRel;
        const bool lift_opt = residual(evaluate(lifted, Permutation(ext)), best_lift) <= kRel;
        suite.require(base_opt == lift_opt, "optimum sets differ for " + to_string(p));
      });
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("spectral: closed-form conditional means");
    for (int n = 3; n <= std::min(max_n, 7); ++n) {
      const LopInstance inst = gen_uniform(n, seed_for(9, n, 0));
      const Eigen::MatrixXd m = marginal_matrix(inst);
      const double count = std::tgamma(double(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) suite.check(residual(positional_mean(inst, i, j) * count, m(i, j)));
      }
      // prefix [0], suffix [n-1] against the brute-force average.
      const std::vector<int> prefix{0};
      const std::vector<int> suffix{n - 1};
      double sum = 0.0, hits = 0.0;
      for_each_permutation(n, [&](const Permutation& p) {
        if (p[0] == 0 && p[n - 1] == n - 1) {
          sum += evaluate(inst, p);
          hits += 1.0;
        }
      });
      suite.check(residual(boundary_mean(inst, prefix, suffix), sum / hits));
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("solvers: polynomial P solver and LAP against enumeration");
    for (int n = 2; n <= max_n; ++n) {
      for (int s = 0; s < options.samples; ++s) {
        const LopInstance inst = gen_p_component(n, seed_for(10, n, s));
        const ExactResult exact = solve_exhaustive(inst);
        suite.check(residual(evaluate(inst, solve_p_exact(inst)), exact.f_max));

        const LopInstance cost = gen_uniform(n, seed_for(11, n, s));
        double best = -INFINITY;
        for_each_permutation(n, [&](const Permutation& w) {
          double v = 0.0;
          for (int i = 0; i < n; ++i) v += cost(i, w[i]);
          best = std::max(best, v);
        });
        suite.check(residual(solve_lap_max(cost.matrix()).value, best));
      }
    }
    report.suites.push_back(suite.finish());
  }

  {
    Suite suite("constructives: exact on P instances, CM equals sorting");
    for (int n = 2; n <= max_n; ++n) {
      for (int s = 0; s < options.samples; ++s) {
        const LopInstance inst = gen_p_component(n, seed_for(12, n, s));
        const double f_max = solve_exhaustive(inst).f_max;
        suite.check(residual(evaluate(inst, construct_ss(inst)), f_max));
        suite.check(residual(evaluate(inst, construct_s(inst)), f_max));
        suite.check(residual(evaluate(inst, construct_cm(inst)), f_max));

        const LopInstance u = gen_uniform(n, seed_for(13, n, s));
        const Eigen::VectorXd v = net_flow(u);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return v(x) > v(y); });
        suite.check(residual(evaluate(u, construct_cm(u)), evaluate(u, Permutation(order))));
      }
    }
    report.suites.push_back(suite.finish());
  }

  return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& s : report.suites) {
    out << (s.passed ? "PASS " : "FAIL ") << s.name << "  cases=" << s.cases
        << "  max_violation=" << format_real(s.max_violation);
    if (!s.detail.empty()) out << "  (" << s.detail << ')';
    out << '\n';
  }
  out << (report.passed() ? "all suites passed" : "verification FAILED") << '\n';
}

}  // namespace lop
