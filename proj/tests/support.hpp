#pragma once

#include "ppart/arith.hpp"

#include <doctest.h>

#include <string>

namespace testing {

using ppart::PrecisionContext;
using ppart::Real;

inline Real dec(const std::string& s, const PrecisionContext& ctx) { return Real(s, ctx.bits()); }

// |a - b| <= 10^-digits * max(1, |b|)
inline bool close(const Real& a, const Real& b, int digits) {
  Real scale = ppart::max(ppart::abs(b), Real(1L, b.prec()));
  return ppart::abs(a - b) <= ppart::pow10(-digits, b.prec()) * scale;
}

inline bool rel_close(const Real& a, const Real& b, int digits) {
  return ppart::abs(a - b) <= ppart::pow10(-digits, b.prec()) * ppart::abs(b);
}

inline double d(const Real& x) { return x.to_double(); }

}  // namespace testing
