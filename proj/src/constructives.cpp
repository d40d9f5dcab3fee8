#include "lop/constructives.hpp"

#include <deque>
#include <limits>
#include <vector>

#include "lop/solvers.hpp"

namespace lop {

namespace {

// q_i = sum_{j in remaining, j != i} (a_ij - a_ji) for each remaining i.
std::vector<double> skew_sums(const LopInstance& inst, const std::vector<int>& remaining) {
  std::vector<double> q;
  q.reserve(remaining.size());
  for (int i : remaining) {
    double s = 0.0;
    for (int j : remaining) s += inst(i, j) - inst(j, i);
    q.push_back(s);
  }
  return q;
}

// First index of the maximum (strict comparison keeps the lowest index).
std::size_t argmax(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[best]) best = k;
  }
  return best;
}

std::size_t argmin(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] < values[best]) best = k;
  }
  return best;
}

std::vector<int> all_elements(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

LopInstance shift_to_nonnegative(const LopInstance& inst) {
  const int n = inst.n();
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) lowest = std::min(lowest, inst(i, j));
    }
  }
  Eigen::MatrixXd shifted = inst.matrix().array() - lowest;
  shifted.diagonal().setZero();
  return LopInstance(std::move(shifted));
}

Permutation becker(const LopInstance& inst) {
  const LopInstance s = shift_to_nonnegative(inst);
  std::vector<int> remaining = all_elements(inst.n());
  std::vector<int> order;
  order.reserve(remaining.size());
  while (!remaining.empty()) {
    std::vector<double> ratio;
    ratio.reserve(remaining.size());
    for (int i : remaining) {
      double row = 0.0, col = 0.0;
      for (int j : remaining) {
        row += s(i, j);
        col += s(j, i);
      }
      if (col == 0.0) {
        ratio.push_back(row > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
      } else {
        ratio.push_back(row / col);
      }
    }
    const std::size_t pick = argmax(ratio);
    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(order));
}

Permutation construct_ss(const LopInstance& inst) {
  std::vector<int> remaining = all_elements(inst.n());
  std::vector<int> order;
  order.reserve(remaining.size());
  while (!remaining.empty()) {
    const std::size_t pick = argmax(skew_sums(inst, remaining));
    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(order));
}

Permutation construct_s(const LopInstance& inst) {
  std::vector<int> remaining = all_elements(inst.n());
  std::vector<int> front;
  std::deque<int> back;
  while (!remaining.empty()) {
    const std::vector<double> q = skew_sums(inst, remaining);
    const std::size_t hi = argmax(q);
    const std::size_t lo = argmin(q);
    std::size_t pick;
    if (q[hi] > -q[lo]) {
      pick = hi;
      front.push_back(remaining[pick]);
    } else {
      pick = lo;
      back.push_front(remaining[pick]);
    }
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  front.insert(front.end(), back.begin(), back.end());
  return Permutation(std::move(front));
}

Eigen::MatrixXd univariate_mean_matrix(const LopInstance& inst) {
  const int n = inst.n();
  const Eigen::RowVectorXd first = net_flow(inst).transpose();
  Eigen::MatrixXd m(n, n);
  m.row(0) = first;
  m.row(n - 1) = -first;
  const Eigen::RowVectorXd step = (m.row(n - 1) - m.row(0)) / double(n - 1);
  for (int i = 1; i < n - 1; ++i) m.row(i) = m.row(0) + double(i) * step;
  return m;
}

Permutation construct_cm(const LopInstance& inst) {
  return solve_lap_max(univariate_mean_matrix(inst)).assignment;
}

}  // namespace lop
