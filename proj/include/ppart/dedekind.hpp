#pragma once

#include "ppart/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace ppart {

struct Verdict {
  std::string name;
  bool applicable = true;
  bool pass = false;
};

struct DedekindSummary {
  long h = 0, k = 1;
  Real C_hk;
  bool has_b = false;  // b_{h,k} needs 1 <= h < k
  Real b_hk;
  Complex v1;
  std::vector<Verdict> bound_flags;
  bool has_residual = false;
  Real residual;
};

struct CoeffSeries {
  long h = 0, k = 1;
  std::vector<Complex> v;  // v[0] = 0, v[p] = v^{(p)}_{h,k}
  std::vector<Complex> b;  // b[0] = 1
};

Real c_hk(long h, long k, const PrecisionContext& ctx);
Complex v1_hk(long h, long k, const PrecisionContext& ctx);
// double Bernoulli sum, p >= 2
Complex vp_hk(int p, long h, long k, const PrecisionContext& ctx);
// closed form through derivatives of cot, p >= 2
Complex vp_hk_cot(int p, long h, long k, const PrecisionContext& ctx);
CoeffSeries b_coeffs(long h, long k, int M, const PrecisionContext& ctx);
// b^{(m)} as the sum over partitions of m of prod v^{(part)}^{mult}/mult!
Complex b_partition_sum(const std::vector<Complex>& v, int m);

Real b_hk(long h, long k, const PrecisionContext& ctx);
Real b1k_estimate(long k, const PrecisionContext& ctx);
Real reciprocity_residual(long h, long k, const PrecisionContext& ctx);
std::vector<Verdict> bound_suite(long h, long k, const PrecisionContext& ctx);
DedekindSummary dedekind_summary(long h, long k, const PrecisionContext& ctx);

struct BminRow {
  long k, h;
  Real b;
};
BminRow b_min(long k, const PrecisionContext& ctx);

// v^{(p)}_{h,k} for every h at one k. The inner sums
// F_p(r) = sum_d B_p(d/k) w^{dr} are shared by all h.
class VEngine {
 public:
  VEngine(long k, mpfr_prec_t prec);
  long k() const { return k_; }
  mpfr_prec_t prec() const { return prec_; }
  Complex v(int p, long h);

 private:
  const std::vector<Complex>& F(int p);

  long k_;
  mpfr_prec_t prec_;
  std::vector<Complex> roots_;
  std::map<int, std::vector<Complex>> F_;
  std::map<int, std::vector<Real>> rows_;
  std::map<int, Real> scale_;
};

// b^{(0..m)}_{h,k} extended on demand
class CoeffStream {
 public:
  CoeffStream(VEngine& eng, long h);
  const Complex& b(int m);
  const Complex& v(int p);

 private:
  VEngine* eng_;
  long h_;
  std::vector<Complex> v_, b_;
};

}  // namespace ppart
