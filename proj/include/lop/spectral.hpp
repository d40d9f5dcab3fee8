#pragma once

// Structural side of the LOP decomposition: validators for the polynomial
// ("P") and NP-hard components, brute-force first-order marginals, the
// first-order reconstruction identity, splitting an instance into the two
// components, the dimension lift, and closed-form conditional means.
//
// The marginal-based operations enumerate permutations explicitly and are
// meant as oracles for small n.

#include <span>

#include "lop/core.hpp"

namespace lop {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kOracleEnumerationLimit = 10;

/// Validator outcome. `max_violation` is the largest raw constraint residual;
/// `threshold` is tol * max(1, max|a_ij|).
struct ComponentCheck {
  bool passed = false;
  double max_violation = 0.0;
  double threshold = 0.0;

  explicit operator bool() const { return passed; }
};

/// Additivity of the skew part: d_ij + d_jk = d_ik for all i, j, k.
ComponentCheck check_p_component(const LopInstance& inst, double tol = kDefaultTolerance);
/// Zero skew row sums: sum_j (a_ij - a_ji) = 0 for every i.
ComponentCheck check_np_component(const LopInstance& inst, double tol = kDefaultTolerance);

inline bool is_p_component(const LopInstance& inst, double tol = kDefaultTolerance) {
  return check_p_component(inst, tol).passed;
}
inline bool is_np_component(const LopInstance& inst, double tol = kDefaultTolerance) {
  return check_np_component(inst, tol).passed;
}

/// A P-component / NP-component pair of equal dimension. The constructor
/// validates both parts and throws PreconditionViolation otherwise.
class ComponentPair {
public:
  ComponentPair(LopInstance p_part, LopInstance np_part, double tol = kDefaultTolerance);

  const LopInstance& p_part() const { return p_; }
  const LopInstance& np_part() const { return np_; }
  int n() const { return p_.n(); }

private:
  LopInstance p_;
  LopInstance np_;
};

/// Sum of f over the (n-1)! permutations with element `element` at position
/// `position`, by explicit enumeration.
double marginal_sum(const LopInstance& inst, int position, int element,
                    int enumeration_limit = kOracleEnumerationLimit);

/// All n^2 marginal sums from one pass over n! permutations; rows are
/// positions, columns are elements.
Eigen::MatrixXd marginal_matrix(const LopInstance& inst, int enumeration_limit = kOracleEnumerationLimit);

/// f(perm) rebuilt from first-order marginals:
///   sum_k m(k, perm[k]) / (n (n-2)!) - (n-2) * mean_value.
/// Exact only for P-component instances; the caller is responsible for that.
double reconstruct_first_order(const LopInstance& inst, const Permutation& perm,
                               int enumeration_limit = kOracleEnumerationLimit);

/// The same reconstruction with the marginals enumerated once, for evaluating
/// many permutations of one instance.
class FirstOrderModel {
public:
  explicit FirstOrderModel(const LopInstance& inst, int enumeration_limit = kOracleEnumerationLimit);
  double operator()(const Permutation& perm) const;
  const Eigen::MatrixXd& marginals() const { return marginals_; }

private:
  Eigen::MatrixXd marginals_;
  double scale_;
  double offset_;
};

/// A = B + C with B a P component holding the symmetric part and the
/// potential-projected skew part, and C the zero-row-sum remainder.
ComponentPair split(const LopInstance& inst);

/// Embeds an (n-1)-instance into an n-instance whose skew row sums vanish:
/// original block kept, last row zero, a_{i,n} = -sum_j (a_ij - a_ji).
LopInstance lift_np(const LopInstance& inst);

/// Mean of f over permutations whose first |prefix| positions are `prefix`.
double prefix_mean(const LopInstance& inst, std::span<const int> prefix);

/// prefix_mean(prefix + next) - prefix_mean(prefix).
double prefix_mean_delta(const LopInstance& inst, std::span<const int> prefix, int next);

/// Mean of f over permutations starting with `prefix` and ending with
/// `suffix`. suffix[0] sits at the last position, suffix[1] just before it.
double boundary_mean(const LopInstance& inst, std::span<const int> prefix, std::span<const int> suffix);

/// Mean of f over permutations with `element` at `position`.
double positional_mean(const LopInstance& inst, int position, int element);

/// positional_mean(i + 1, element) - positional_mean(i, element), independent
/// of i; equals -net_flow[element] / (n - 1).
double positional_mean_delta(const LopInstance& inst, int element);

}  // namespace lop
