#pragma once

#include <gmpxx.h>

#include <vector>

namespace opf::testing {

/// Coefficients of prod_k (1 + q^k) / (1 - q^k) up to q^max_n, by direct series
/// multiplication. Shares no code with the recurrence.
inline std::vector<mpz_class> product_expansion(std::size_t max_n) {
  std::vector<mpz_class> c(max_n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= max_n; ++k) {
    for (std::size_t i = max_n; i >= k; --i) c[i] += c[i - k];
    for (std::size_t i = k; i <= max_n; ++i) c[i] += c[i - k];
  }
  return c;
}

}  // namespace opf::testing
