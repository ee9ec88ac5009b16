#pragma once

#include "ppart/almkvist.hpp"
#include "ppart/arith.hpp"
#include "ppart/dedekind.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ppart {

struct TermRecord {
  long k = 1;
  int m = 0;
  Real value, abs_value;
};

enum class StopReason { MinimumFound, BelowFloor, Exhausted };
std::string to_string(StopReason r);

struct PhiBreakdown {
  long k = 1;
  int m_star_used = 0;
  std::vector<TermRecord> terms;  // summed, increasing m
  std::vector<TermRecord> tail;   // computed past the cut to locate the minimum
  Real phi_value;
  Real trunc_error_est;
  StopReason stop_reason = StopReason::Exhausted;
  double max_imag_ratio = 0;  // max |Im| / max(|Re|, 1) over computed terms
};

struct EstimateOptions {
  double kappa2 = 0;
  double k_threshold = 0.01;
  double m_floor = 0.001;
  int digits = 0;  // 0 = precision_for(n)
  bool with_exact = false;
  bool theory_cutoff = false;
  int max_m = 5000;
};

struct EstimateReport {
  long n = 0;
  PrecisionContext ctx;
  long N_cutoff = 0;  // last k with probe at or above threshold (or floor N(n) + 1 in theory mode)
  long N_used = 0;
  std::vector<PhiBreakdown> per_k;
  PhiBreakdown probe;  // phi_{N_used+1}
  Real estimate;
  mpz_class rounded;
  Real estimated_error;
  bool has_exact = false;
  mpz_class exact;
  Real actual_error;
  int digits_agreeing = 0;
};

Real lambda_param(long n, long k, const PrecisionContext& ctx);
Real c_of_lambda(const Real& lambda, const PrecisionContext& ctx);
Real d_of_lambda(const Real& lambda, const PrecisionContext& ctx);
// lambda_c with d(lambda_c) = 1
Real lambda_critical(const PrecisionContext& ctx);

Complex psi_m(long n, long h, long k, int m, const PrecisionContext& ctx);
Real phi_m(long n, long k, int m, const PrecisionContext& ctx);

// Streams phi^{(m)}_k(n) in increasing m, sharing everything that does not depend on m.
class PhiStream {
 public:
  PhiStream(long n, long k, const PrecisionContext& ctx);
  ~PhiStream();

  struct Term {
    Real value;   // Re phi^{(m)}_k(n)
    Real imag;    // Im phi^{(m)}_k(n), zero up to rounding
    Real scale;   // sum over h of |psi^{(m)}_{h,k}(n)|
    bool zero = false;  // cancels identically across h
  };
  Term term(int m);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Real mstar_theory(long n, long k, const PrecisionContext& ctx);
PhiBreakdown mstar_numeric(long n, long k, const PrecisionContext& ctx, double floor = 0.001, int max_m = 5000);

Real n_cutoff_theory(long n, double kappa2, double kappa3 = 0.06);
// e^{k zeta'(-1)} (a/k)^{1/2+k/24} A((a/k^3)^{1/2} n | -k/12)
Real cutoff_probe(long n, long k, const PrecisionContext& ctx);
// the k at which the probe reaches the threshold: one before the first k below it
long n_cutoff_numeric(long n, const PrecisionContext& ctx, double threshold = 0.01);

Real sa_error_bound(long n, long k, const PrecisionContext& ctx);

struct MinorArcBound {
  Real type1;
  Real type2;
  Real lambda0;
};
MinorArcBound minor_arc_bound(long n, double kappa2, const PrecisionContext& ctx, double lambda0 = 0.2);

Real phi0_bound(long n, long k, const PrecisionContext& ctx);

EstimateReport p2_estimate(long n, const EstimateOptions& opts);

}  // namespace ppart
