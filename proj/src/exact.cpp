#include "ppart/exact.hpp"

#include "ppart/arith.hpp"

#include <algorithm>

namespace ppart {

PlanePartitionTable p2_exact_table(long N) {
  if (N < 0) throw DomainError("p2_exact_table: N must be non-negative");
  auto s2 = sigma2_table(static_cast<unsigned long>(N));
  PlanePartitionTable t;
  t.values.resize(N + 1);
  t.values[0] = 1;
  mpz_class acc;
  for (long n = 1; n <= N; ++n) {
    acc = 0;
    for (long j = 1; j <= n; ++j) mpz_addmul_ui(acc.get_mpz_t(), t.values[n - j].get_mpz_t(), s2[j]);
    mpz_divexact_ui(t.values[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return t;
}

namespace {

// Fill the array row by row; row r must be a partition dominated by row r-1.
// `above` is the previous row (empty for the first one).
long count_rows(int rem, const std::vector<int>& above) {
  if (rem == 0) return 1;
  long total = 0;
  std::vector<int> row;
  // depth-first over rows with sum <= rem
  auto rec = [&](auto& self, int left, int cap_prev) -> void {
    size_t i = row.size();
    if (!row.empty()) total += count_rows(left, row);
    if (left == 0 || i >= above.size()) return;
    int hi = std::min({left, above[i], cap_prev});
    for (int v = hi; v >= 1; --v) {
      row.push_back(v);
      self(self, left - v, v);
      row.pop_back();
    }
  };
  rec(rec, rem, rem);
  return total;
}

}  // namespace

mpz_class p2_enumerate(int n) {
  if (n < 0 || n > 8) throw DomainError("p2_enumerate: n must be in [0, 8]");
  return count_rows(n, std::vector<int>(n, n));
}

std::vector<mpz_class> p2_product_series(long N) {
  if (N < 0) throw DomainError("p2_product_series: N must be non-negative");
  std::vector<mpz_class> c(N + 1, 0);
  c[0] = 1;
  // multiply by 1/(1-q^m), m times
  for (long m = 1; m <= N; ++m)
    for (long rep = 0; rep < m; ++rep)
      for (long i = m; i <= N; ++i) c[i] += c[i - m];
  return c;
}

}  // namespace ppart
