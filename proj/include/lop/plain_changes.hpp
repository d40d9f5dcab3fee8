#pragma once

#include <algorithm>
#include <vector>

namespace lop {

/// Steinhaus-Johnson-Trotter order via Knuth's Algorithm P ("plain changes").
///
/// Starting from any arrangement of `m` items, calls `on_swap(k)` m! - 1 times;
/// each call means "exchange positions k and k+1" (0-based) and the caller
/// applies the exchange. After all calls every arrangement has been visited
/// exactly once. Amortized O(1) per step.
template <typename OnSwap>
void for_each_plain_change(int m, OnSwap&& on_swap) {
  if (m < 2) return;
  // 1-based to match the textbook control tables.
  std::vector<int> c(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> o(static_cast<std::size_t>(m) + 1, 1);
  for (;;) {
    int j = m;
    int s = 0;
    for (;;) {
      const int q = c[j] + o[j];
      if (q < 0) {
        o[j] = -o[j];
        --j;
        continue;
      }
      if (q == j) {
        if (j == 1) return;
        ++s;
        o[j] = -o[j];
        --j;
        continue;
      }
      const int p1 = j - c[j] + s;
      const int p2 = j - q + s;
      on_swap(std::min(p1, p2) - 1);
      c[j] = q;
      break;
    }
  }
}

}  // namespace lop
