#pragma once

#include <gmpxx.h>

#include <vector>

namespace ppart {

struct PlanePartitionTable {
  std::vector<mpz_class> values;  // p2(0..N)
};

// n p2(n) = sum_{j=1}^{n} sigma2(j) p2(n-j)
PlanePartitionTable p2_exact_table(long N);

// exhaustive enumeration, 0 <= n <= 8
mpz_class p2_enumerate(int n);

// coefficients of prod_{m=1}^{N} (1-q^m)^{-m} to order q^N, multiplied out directly
std::vector<mpz_class> p2_product_series(long N);

}  // namespace ppart
