#pragma once

#include <cstdint>

#include "lop/core.hpp"
#include "lop/spectral.hpp"

namespace lop {

/// Global maximum and minimum of f.
struct ExactResult {
  Permutation best;
  double f_max = 0.0;
  Permutation worst;
  double f_min = 0.0;
  /// Largest |incremental f - evaluate| seen at recomputation checkpoints.
  double max_drift = 0.0;
  std::uint64_t visited = 0;
};

struct ExhaustiveOptions {
  int enumeration_limit = 11;
  /// Threads sharing the n first-position shards; results do not depend on it.
  int workers = 1;
  /// Steps between from-scratch re-evaluations inside a shard.
  std::uint64_t recompute_interval = 1u << 14;
};

/// Enumerates all n! permutations in plain-changes order (one adjacent
/// transposition per step, O(1) objective update). Sharded by the element at
/// position 0; ties resolve to the first permutation met in shard order.
ExactResult solve_exhaustive(const LopInstance& inst, const ExhaustiveOptions& options = {});

/// Polynomial insertion algorithm for P-component instances. Validates the
/// additivity condition first and throws PreconditionViolation when it fails.
Permutation solve_p_exact(const LopInstance& inst, double tol = kDefaultTolerance);

struct Assignment {
  /// assignment[i] is the column matched to row i.
  Permutation assignment;
  double value = 0.0;
};

/// Maximizing linear assignment, O(n^3) shortest augmenting paths with
/// potentials (Hungarian method). Throws InvalidArgument on non-square or
/// empty input.
Assignment solve_lap_max(const Eigen::MatrixXd& cost);

}  // namespace lop
