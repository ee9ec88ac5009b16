#pragma once

#include "ppart/arith.hpp"

namespace ppart {

struct AlmkvistEval {
  Real x, gamma, value;
  long terms_used = 0;
  Real tail_bound;
};

struct SaddleData {
  Real lambda, g, f1, f1p, f1pp, f2;
};

// A(x|gamma) = (1/2) sum_j x^j / (j! Gamma((3-gamma+j)/2)), gamma < 3
AlmkvistEval almkvist_series(const Real& x, const Real& gamma, const PrecisionContext& ctx);
Real almkvist_saddle(const Real& x, const Real& gamma, const PrecisionContext& ctx);

// root of g^3 + 3 lambda g^2 = 1 on the branch g(0) = 1
Real saddle_g(const Real& lambda, const PrecisionContext& ctx);
// Cardano form, real only for lambda^3 < 1/4
Real saddle_g_radical(const Real& lambda, const PrecisionContext& ctx);
SaddleData saddle_data(const Real& lambda, const PrecisionContext& ctx);

Real wright_leading(long n, const PrecisionContext& ctx);

}  // namespace ppart
