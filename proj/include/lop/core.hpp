#pragma once

// Instance and permutation types for the Linear Ordering Problem.
//
// Indexing convention: everything in the C++ API is 0-based. A permutation
// is stored in one-line form by position, `perm[k]` being the element
// (row/column of the instance matrix) placed at position k. Text formats and
// the CLI print permutations 1-based; use Permutation::from_one_based and
// to_one_based at those boundaries.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lop/error.hpp"

namespace lop {

class Permutation {
public:
  Permutation() = default;

  /// Takes a 0-based one-line array; throws InvalidArgument unless it is a
  /// bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<int> order) : order_(std::move(order)) {
    if (!is_bijection(order_)) {
      throw InvalidArgument("permutation: not a bijection on 0..n-1");
    }
  }

  static Permutation identity(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k;
    return Permutation(std::move(order));
  }

  static Permutation from_one_based(std::span<const int> one_based) {
    std::vector<int> order(one_based.begin(), one_based.end());
    for (int& v : order) --v;
    return Permutation(std::move(order));
  }

  std::vector<int> to_one_based() const {
    std::vector<int> out(order_);
    for (int& v : out) ++v;
    return out;
  }

  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int position) const { return order_[static_cast<std::size_t>(position)]; }
  std::span<const int> elements() const { return order_; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  static bool is_bijection(std::span<const int> order) {
    std::vector<char> seen(order.size(), 0);
    for (int v : order) {
      if (v < 0 || static_cast<std::size_t>(v) >= order.size() || seen[static_cast<std::size_t>(v)]) {
        return false;
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
  }

private:
  std::vector<int> order_;
};

std::string to_string(const Permutation& perm);

/// Square matrix with a zero diagonal and n >= 2.
template <typename Scalar>
class BasicInstance {
public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// Diagonal entries within `diagonal_tol` of zero are snapped to exactly 0;
  /// anything else is rejected.
  explicit BasicInstance(Matrix a, Scalar diagonal_tol = Scalar(0)) : a_(std::move(a)) {
    if (a_.rows() != a_.cols()) throw InvalidArgument("instance: matrix is not square");
    if (a_.rows() < 2) throw InvalidArgument("instance: dimension must be at least 2");
    for (Eigen::Index i = 0; i < a_.rows(); ++i) {
      if (!(std::abs(a_(i, i)) <= diagonal_tol)) {
        throw InvalidArgument("instance: diagonal entry " + std::to_string(i) + " is not zero");
      }
      a_(i, i) = Scalar(0);
    }
  }

  static BasicInstance zero(int n) { return BasicInstance(Matrix::Zero(n, n)); }

  int n() const { return static_cast<int>(a_.rows()); }
  const Matrix& matrix() const { return a_; }
  Scalar operator()(int i, int j) const { return a_(i, j); }

  friend bool operator==(const BasicInstance& x, const BasicInstance& y) {
    return x.a_.rows() == y.a_.rows() && x.a_ == y.a_;
  }

private:
  Matrix a_;
};

using LopInstance = BasicInstance<double>;

namespace detail {
inline void require_same_size(int n, const Permutation& perm) {
  if (perm.size() != n) throw InvalidArgument("permutation length does not match instance dimension");
}
}  // namespace detail

/// Sum of the entries above the diagonal after reordering rows and columns by
/// `perm`.
template <typename Scalar>
Scalar evaluate(const BasicInstance<Scalar>& inst, const Permutation& perm) {
  detail::require_same_size(inst.n(), perm);
  const auto& a = inst.matrix();
  const std::span<const int> order = perm.elements();
  Scalar total(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) total += a(order[i], order[j]);
  }
  return total;
}

/// f(perm with positions k and k+1 exchanged) - f(perm). `k` is 0-based.
template <typename Scalar>
Scalar adjacent_swap_delta(const BasicInstance<Scalar>& inst, const Permutation& perm, int k) {
  detail::require_same_size(inst.n(), perm);
  if (k < 0 || k >= inst.n() - 1) throw InvalidArgument("adjacent_swap_delta: position out of range");
  return inst(perm[k + 1], perm[k]) - inst(perm[k], perm[k + 1]);
}

Permutation swap_positions(const Permutation& perm, int i, int j);

/// [p_{n-1}, p_0, ..., p_{n-2}]
Permutation cyclic_shift(const Permutation& perm);

/// Skew part D = A - A^T as an Eigen expression.
template <typename Scalar>
auto skew(const BasicInstance<Scalar>& inst) {
  return inst.matrix() - inst.matrix().transpose();
}

/// v_j = sum_{k != j} (a_jk - a_kj): row sums of the skew part.
template <typename Scalar>
typename BasicInstance<Scalar>::Vector net_flow(const BasicInstance<Scalar>& inst) {
  return skew(inst).rowwise().sum();
}

/// Mean of f over all n! permutations: each ordered pair precedes with
/// probability 1/2.
template <typename Scalar>
Scalar mean_value(const BasicInstance<Scalar>& inst) {
  return inst.matrix().sum() / Scalar(2);
}

/// |f - f_max| / |f_max - f_min|; 0 when the objective is constant.
double relative_error(double f_sigma, double f_max, double f_min);

}  // namespace lop
