#include "lop/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "lop/plain_changes.hpp"

namespace lop {

namespace {

struct ShardResult {
  std::vector<int> best;
  double f_best = -std::numeric_limits<double>::infinity();
  std::vector<int> worst;
  double f_worst = std::numeric_limits<double>::infinity();
  double max_drift = 0.0;
  std::uint64_t visited = 0;
};

double evaluate_raw(const Eigen::MatrixXd& a, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  double total = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) total += a(order[i], order[j]);
  }
  return total;
}

// All permutations with `head` at position 0; the tail is permuted by plain
// changes over positions 1..n-1.
ShardResult run_shard(const Eigen::MatrixXd& a, int head, std::uint64_t recompute_interval) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> order;
  order.reserve(n);
  order.push_back(head);
  for (int v = 0; v < n; ++v) {
    if (v != head) order.push_back(v);
  }

  ShardResult r;
  double f = evaluate_raw(a, order);
  auto record = [&] {
    if (f > r.f_best) {
      r.f_best = f;
      r.best = order;
    }
    if (f < r.f_worst) {
      r.f_worst = f;
      r.worst = order;
    }
  };
  record();
  r.visited = 1;

  const double* data = a.data();
  const std::size_t ld = n;
  int* p = order.data() + 1;
  std::uint64_t since_check = 0;
  for_each_plain_change(n - 1, [&](int k) {
    const int x = p[k];
    const int y = p[k + 1];
    // Column-major: a(i, j) = data[i + j * ld].
    f += data[y + x * ld] - data[x + y * ld];
    p[k] = y;
    p[k + 1] = x;
    if (++since_check == recompute_interval) {
      since_check = 0;
      const double exact = evaluate_raw(a, order);
      r.max_drift = std::max(r.max_drift, std::abs(exact - f));
      f = exact;
    }
    record();
    ++r.visited;
  });
  r.max_drift = std::max(r.max_drift, std::abs(evaluate_raw(a, order) - f));
  return r;
}

}  // namespace

ExactResult solve_exhaustive(const LopInstance& inst, const ExhaustiveOptions& options) {
  const int n = inst.n();
  if (n > options.enumeration_limit) {
    throw ResourceLimit("exhaustive search over " + std::to_string(n) + "! permutations exceeds limit n <= " +
                        std::to_string(options.enumeration_limit));
  }
  const std::uint64_t interval = std::max<std::uint64_t>(1, options.recompute_interval);
  std::vector<ShardResult> shards(n);
  const int workers = std::clamp(options.workers, 1, n);

  if (workers == 1) {
    for (int h = 0; h < n; ++h) shards[h] = run_shard(inst.matrix(), h, interval);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int h = w; h < n; h += workers) shards[h] = run_shard(inst.matrix(), h, interval);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  const ShardResult* best = &shards[0];
  const ShardResult* worst = &shards[0];
  ExactResult out;
  for (const auto& s : shards) {
    if (s.f_best > best->f_best) best = &s;
    if (s.f_worst < worst->f_worst) worst = &s;
    out.max_drift = std::max(out.max_drift, s.max_drift);
    out.visited += s.visited;
  }
  out.best = Permutation(best->best);
  out.worst = Permutation(worst->worst);
  out.f_max = evaluate(inst, out.best);
  out.f_min = evaluate(inst, out.worst);
  return out;
}

Permutation solve_p_exact(const LopInstance& inst, double tol) {
  if (const auto check = check_p_component(inst, tol); !check) {
    throw PreconditionViolation("solve_p_exact: instance is not a P component (violation " +
                                std::to_string(check.max_violation) + ")");
  }
  const int n = inst.n();
  std::vector<int> order = inst(0, 1) - inst(1, 0) > 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
  for (int i = 2; i < n; ++i) {
    auto slot = order.end();
    for (auto it = order.begin(); it != order.end(); ++it) {
      // Strict: equal differences keep scanning.
      if (inst(*it, i) - inst(i, *it) < 0) {
        slot = it;
        break;
      }
    }
    order.insert(slot, i);
  }
  return Permutation(std::move(order));
}

Assignment solve_lap_max(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) throw InvalidArgument("solve_lap_max: cost matrix is not square");
  if (cost.rows() == 0) throw InvalidArgument("solve_lap_max: empty cost matrix");
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();

  // Minimize -cost. Rows/columns 1..n; column 0 is the virtual root.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int row = 1; row <= n; ++row) {
    match[0] = row;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = -cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> assignment(n);
  for (int j = 1; j <= n; ++j) assignment[match[j] - 1] = j - 1;
  double value = 0.0;
  for (int i = 0; i < n; ++i) value += cost(i, assignment[i]);
  return {Permutation(std::move(assignment)), value};
}

}  // namespace lop
