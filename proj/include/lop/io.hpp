#pragma once

// Instance text format:
//   line 1      n
//   lines 2..   n whitespace-separated reals per row
// Lines starting with '#' are comments and may appear anywhere; generators
// append one as a metadata trailer. Diagonal entries must read as 0 within
// 1e-12.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lop/core.hpp"

namespace lop {

inline constexpr double kDiagonalReadTolerance = 1e-12;

LopInstance read_instance(std::istream& in);
LopInstance load_instance(const std::filesystem::path& path);

/// Entries are written with 17 significant digits, so reading back is exact.
void write_instance(std::ostream& out, const LopInstance& inst,
                    const std::vector<std::string>& comments = {});
void save_instance(const std::filesystem::path& path, const LopInstance& inst,
                   const std::vector<std::string>& comments = {});

/// printf-style "%.17g".
std::string format_real(double value);

}  // namespace lop
