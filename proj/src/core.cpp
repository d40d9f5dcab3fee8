#include "lop/core.hpp"

#include <algorithm>
#include <sstream>

namespace lop {

std::string to_string(const Permutation& perm) {
  std::ostringstream out;
  out << '[';
  for (int k = 0; k < perm.size(); ++k) {
    if (k > 0) out << ' ';
    out << perm[k] + 1;
  }
  out << ']';
  return out.str();
}

Permutation swap_positions(const Permutation& perm, int i, int j) {
  const int n = perm.size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("swap_positions: position out of range");
  if (i >= j) throw InvalidArgument("swap_positions: requires i < j");
  std::vector<int> order(perm.begin(), perm.end());
  std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  return Permutation(std::move(order));
}

Permutation cyclic_shift(const Permutation& perm) {
  if (perm.size() < 2) return perm;
  std::vector<int> order(perm.begin(), perm.end());
  std::rotate(order.rbegin(), order.rbegin() + 1, order.rend());
  return Permutation(std::move(order));
}

double relative_error(double f_sigma, double f_max, double f_min) {
  const double range = std::abs(f_max - f_min);
  if (range == 0.0) return 0.0;
  // Rounding can push f_sigma a hair outside [f_min, f_max].
  return std::clamp(std::abs(f_sigma - f_max) / range, 0.0, 1.0);
}

}  // namespace lop
