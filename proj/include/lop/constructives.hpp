#pragma once

// Univariate constructive heuristics. Every argmax breaks ties toward the
// lowest element index.

#include "lop/core.hpp"

namespace lop {

/// Subtracts the minimum off-diagonal entry from every off-diagonal entry,
/// leaving a nonnegative matrix with zero diagonal.
LopInstance shift_to_nonnegative(const LopInstance& inst);

/// Becker's method: after shift_to_nonnegative, repeatedly takes the remaining
/// element with the largest row-sum / column-sum ratio over the remaining set.
/// x/0 with x > 0 ranks as +inf; 0/0 ranks as 1.
Permutation becker(const LopInstance& inst);

/// Appends, one at a time, the remaining element with the largest skew row sum
/// over the remaining set.
Permutation construct_ss(const LopInstance& inst);

/// Two-ended variant: each round either appends the largest skew row sum to
/// the front block or prepends the smallest to the back block, whichever has
/// the larger magnitude (ties go to the back block).
Permutation construct_s(const LopInstance& inst);

/// Position x element matrix of first-order means (up to per-row constants):
/// row 0 is net_flow, row n-1 its negation, rows in between interpolate.
Eigen::MatrixXd univariate_mean_matrix(const LopInstance& inst);

/// Maximizing assignment of univariate_mean_matrix; element result[i] goes to
/// position i.
Permutation construct_cm(const LopInstance& inst);

}  // namespace lop
