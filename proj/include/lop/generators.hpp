#pragma once

// Seeded random instances for the two components and their weighted sums.
// All random reals are U(-1, 1).

#include <cstdint>
#include <string>

#include "lop/core.hpp"
#include "lop/random.hpp"
#include "lop/spectral.hpp"

namespace lop {

/// Additive skew part: a random chain fixes consecutive differences (three
/// randomly chosen ways of drawing the pair), additivity fills the rest of D,
/// and the remaining entries are drawn one per pair.
LopInstance gen_p_component(int n, const RngSeed& seed);

/// Zero skew row sums: pairs are drawn at random and any row left with a
/// single open entry is closed to make its skew sum zero. Random draws avoid
/// pairs whose removal would disconnect the graph of open pairs, so closing
/// rows never over-determines an entry.
LopInstance gen_np_component(int n, const RngSeed& seed);

/// Off-diagonal entries i.i.d. U(-1, 1).
LopInstance gen_uniform(int n, const RngSeed& seed);

/// P part from path {0}, NP part from path {1} under `cell_seed`.
ComponentPair gen_component_pair(int n, std::uint64_t cell_seed);

/// p_part + epsilon * np_part.
LopInstance compose(const ComponentPair& pair, double epsilon);
LopInstance compose(const LopInstance& p_part, const LopInstance& np_part, double epsilon);

enum class InstanceKind { P, NP, Uniform };

InstanceKind parse_instance_kind(const std::string& name);
std::string to_string(InstanceKind kind);
LopInstance generate(InstanceKind kind, int n, const RngSeed& seed);

}  // namespace lop
