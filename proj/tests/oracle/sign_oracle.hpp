#pragma once

// Test-only oracles. Nothing here calls into the library.

#include <cstddef>
#include <vector>

namespace swm::testing {

/// (-1)^floor((i - 1) / (n - j + 1)) for 1-based i, j.
inline int closed_form_sign(std::size_t n, std::size_t i, std::size_t j) {
  return ((i - 1) / (n - j + 1)) % 2 == 0 ? 1 : -1;
}

inline std::vector<std::vector<int>> closed_form_matrix(std::size_t n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) a[i - 1][j - 1] = closed_form_sign(n, i, j);
  return a;
}

}  // namespace swm::testing
