#include "lop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace lop {

namespace {

double scaled_threshold(const LopInstance& inst, double tol) {
  if (tol < 0.0) throw InvalidArgument("validator tolerance must be nonnegative");
  return tol * std::max(1.0, inst.matrix().cwiseAbs().maxCoeff());
}

void require_enumerable(int n, int limit) {
  if (n > limit) {
    throw ResourceLimit("enumeration of " + std::to_string(n) + "! permutations exceeds limit n <= " +
                        std::to_string(limit));
  }
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

void require_element(int n, int v, const char* what) {
  if (v < 0 || v >= n) throw InvalidArgument(std::string(what) + " out of range");
}

// Marks `elements` in `placed`; rejects repeats and out-of-range values.
void mark_placed(int n, std::span<const int> elements, std::vector<char>& placed) {
  for (int v : elements) {
    require_element(n, v, "element");
    if (placed[static_cast<std::size_t>(v)]) throw InvalidArgument("element assigned twice");
    placed[static_cast<std::size_t>(v)] = 1;
  }
}

double free_block_half_sum(const LopInstance& inst, const std::vector<char>& placed) {
  const int n = inst.n();
  double s = 0.0;
  for (int l = 0; l < n; ++l) {
    if (placed[static_cast<std::size_t>(l)]) continue;
    for (int m = 0; m < n; ++m) {
      if (m != l && !placed[static_cast<std::size_t>(m)]) s += inst(l, m);
    }
  }
  return 0.5 * s;
}

}  // namespace

ComponentCheck check_p_component(const LopInstance& inst, double tol) {
  const Eigen::MatrixXd d = skew(inst);
  const int n = inst.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(d(i, j) + d(j, k) - d(i, k)));
    }
  }
  const double threshold = scaled_threshold(inst, tol);
  return {worst <= threshold, worst, threshold};
}

ComponentCheck check_np_component(const LopInstance& inst, double tol) {
  const double worst = net_flow(inst).cwiseAbs().maxCoeff();
  const double threshold = scaled_threshold(inst, tol);
  return {worst <= threshold, worst, threshold};
}

ComponentPair::ComponentPair(LopInstance p_part, LopInstance np_part, double tol)
    : p_(std::move(p_part)), np_(std::move(np_part)) {
  if (p_.n() != np_.n()) throw InvalidArgument("component pair: dimension mismatch");
  if (const auto c = check_p_component(p_, tol); !c) {
    throw PreconditionViolation("component pair: P part violates additivity by " + std::to_string(c.max_violation));
  }
  if (const auto c = check_np_component(np_, tol); !c) {
    throw PreconditionViolation("component pair: NP part has skew row sum " + std::to_string(c.max_violation));
  }
}

double marginal_sum(const LopInstance& inst, int position, int element, int enumeration_limit) {
  const int n = inst.n();
  require_element(n, position, "position");
  require_element(n, element, "element");
  require_enumerable(n, enumeration_limit);

  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (v != element) rest.push_back(v);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  long double total = 0.0L;
  do {
    for (int k = 0, r = 0; k < n; ++k) {
      order[static_cast<std::size_t>(k)] = k == position ? element : rest[static_cast<std::size_t>(r++)];
    }
    total += evaluate(inst, Permutation(order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return static_cast<double>(total);
}

Eigen::MatrixXd marginal_matrix(const LopInstance& inst, int enumeration_limit) {
  const int n = inst.n();
  require_enumerable(n, enumeration_limit);
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> acc =
      Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    const double f = evaluate(inst, Permutation(order));
    for (int k = 0; k < n; ++k) acc(k, order[static_cast<std::size_t>(k)]) += f;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc.cast<double>();
}

double reconstruct_first_order(const LopInstance& inst, const Permutation& perm, int enumeration_limit) {
  const int n = inst.n();
  if (perm.size() != n) throw InvalidArgument("permutation length does not match instance dimension");
  require_enumerable(n, enumeration_limit);
  double total = 0.0;
  for (int k = 0; k < n; ++k) total += marginal_sum(inst, k, perm[k], enumeration_limit);
  return total / (n * factorial(n - 2)) - (n - 2) * mean_value(inst);
}

FirstOrderModel::FirstOrderModel(const LopInstance& inst, int enumeration_limit)
    : marginals_(marginal_matrix(inst, enumeration_limit)),
      scale_(inst.n() * factorial(inst.n() - 2)),
      offset_((inst.n() - 2) * mean_value(inst)) {}

double FirstOrderModel::operator()(const Permutation& perm) const {
  const int n = static_cast<int>(marginals_.rows());
  if (perm.size() != n) throw InvalidArgument("permutation length does not match instance dimension");
  double total = 0.0;
  for (int k = 0; k < n; ++k) total += marginals_(k, perm[k]);
  return total / scale_ - offset_;
}

ComponentPair split(const LopInstance& inst) {
  const int n = inst.n();
  const Eigen::MatrixXd& a = inst.matrix();
  const Eigen::MatrixXd d = skew(inst);
  const Eigen::VectorXd u = d.rowwise().sum() / double(n);
  const Eigen::MatrixXd potential_part = u.replicate(1, n) - u.transpose().replicate(n, 1);
  const Eigen::MatrixXd c_raw = (d - potential_part) / 2.0;

  // B = fl(A - C), then C = fl(A - B): makes fl(B + C) == A wherever a
  // representable pair exists.
  Eigen::MatrixXd b = a - c_raw;
  Eigen::MatrixXd c = a - b;
  b.diagonal().setZero();
  c.diagonal().setZero();
  return ComponentPair(LopInstance(std::move(b)), LopInstance(std::move(c)));
}

LopInstance lift_np(const LopInstance& inst) {
  const int m = inst.n();
  Eigen::MatrixXd lifted = Eigen::MatrixXd::Zero(m + 1, m + 1);
  lifted.topLeftCorner(m, m) = inst.matrix();
  lifted.col(m).head(m) = -net_flow(inst);
  return LopInstance(std::move(lifted));
}

double prefix_mean(const LopInstance& inst, std::span<const int> prefix) {
  return boundary_mean(inst, prefix, {});
}

double prefix_mean_delta(const LopInstance& inst, std::span<const int> prefix, int next) {
  const int n = inst.n();
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  mark_placed(n, prefix, placed);
  require_element(n, next, "element");
  if (placed[static_cast<std::size_t>(next)]) throw InvalidArgument("prefix_mean_delta: element already placed");
  placed[static_cast<std::size_t>(next)] = 1;
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    if (!placed[static_cast<std::size_t>(j)]) s += inst(next, j) - inst(j, next);
  }
  return 0.5 * s;
}

double boundary_mean(const LopInstance& inst, std::span<const int> prefix, std::span<const int> suffix) {
  const int n = inst.n();
  if (prefix.size() + suffix.size() > static_cast<std::size_t>(n)) {
    throw InvalidArgument("boundary_mean: more assignments than positions");
  }
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  mark_placed(n, prefix, placed);
  mark_placed(n, suffix, placed);

  // Each prefix element precedes everything not yet placed before it.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  double total = 0.0;
  for (int head : prefix) {
    seen[static_cast<std::size_t>(head)] = 1;
    for (int j = 0; j < n; ++j) {
      if (!seen[static_cast<std::size_t>(j)]) total += inst(head, j);
    }
  }
  // Each suffix element follows everything except the prefix and the suffix
  // elements behind it.
  for (int tail : suffix) {
    seen[static_cast<std::size_t>(tail)] = 1;
    for (int i = 0; i < n; ++i) {
      if (!seen[static_cast<std::size_t>(i)]) total += inst(i, tail);
    }
  }
  return total + free_block_half_sum(inst, placed);
}

double positional_mean(const LopInstance& inst, int position, int element) {
  const int n = inst.n();
  require_element(n, position, "position");
  require_element(n, element, "element");
  const double row = inst.matrix().row(element).sum();
  const double col = inst.matrix().col(element).sum();
  const double rest = inst.matrix().sum() - row - col;
  return (double(position) / (n - 1)) * col + (double(n - 1 - position) / (n - 1)) * row + 0.5 * rest;
}

double positional_mean_delta(const LopInstance& inst, int element) {
  const int n = inst.n();
  require_element(n, element, "element");
  const double v = inst.matrix().row(element).sum() - inst.matrix().col(element).sum();
  return -v / (n - 1);
}

}  // namespace lop
