#include "ppart/almkvist.hpp"

#include <cmath>

namespace ppart {

AlmkvistEval almkvist_series(const Real& x, const Real& gamma, const PrecisionContext& ctx) {
  if (!(gamma < 3.0)) throw DomainError("almkvist_series: gamma must be below 3");
  if (x < 0.0) throw DomainError("almkvist_series: x must be non-negative");
  const mpfr_prec_t prec = ctx.bits();
  const mpfr_prec_t wp = prec + 16;
  Real X(wp), G(wp);
  mpfr_set(X.get(), x.get(), MPFR_RNDN);
  mpfr_set(G.get(), gamma.get(), MPFR_RNDN);
  Real x2 = X * X;
  Real eps = pow10(-(ctx.digits + 10), wp);

  // s_j = (3 - gamma + j)/2; Gamma(s_{j+2}) = s_j Gamma(s_j)
  Real s0 = (3 - G) / 2;
  Real s1 = (4 - G) / 2;
  Real t[2] = {exp(-lngamma(s0)), X * exp(-lngamma(s1))};
  Real s[2] = {s0, s1};
  Real sum = t[0] + t[1];
  long j = 1;
  AlmkvistEval out;
  if (X.is_zero()) {
    out.terms_used = 1;
    out.tail_bound = Real(0L, prec);
    sum = t[0];
  } else {
    bool past[2] = {false, false};
    while (true) {
      ++j;
      int c = static_cast<int>(j % 2);
      // t_j from t_{j-2}
      Real ratio = x2 / (s[c] * ((j - 1) * j));
      if (ratio < 1.0) past[c] = true;
      t[c] *= ratio;
      s[c] += Real(1L, wp);
      sum += t[c];
      if (past[0] && past[1] && t[0] + t[1] < sum * eps) break;
    }
    out.terms_used = j + 1;
    // both chains have decreasing ratios from here on, so geometric tails bound them
    Real tail(0L, wp);
    for (int c = 0; c < 2; ++c) {
      long jj = j + 1 + ((j + 1) % 2 == c ? 0 : 1);
      Real r = x2 / (s[c] * ((jj - 1) * jj));
      tail += t[c] * r / (1 - r);
    }
    out.tail_bound = Real(prec);
    mpfr_set(out.tail_bound.get(), tail.get(), MPFR_RNDN);
    out.tail_bound /= 2;
  }
  out.x = x;
  out.gamma = gamma;
  out.value = Real(prec);
  mpfr_set(out.value.get(), sum.get(), MPFR_RNDN);
  out.value /= 2;
  return out;
}

Real saddle_g(const Real& lambda, const PrecisionContext& ctx) {
  if (lambda < 0.0) throw DomainError("saddle_g: lambda must be non-negative");
  const mpfr_prec_t prec = ctx.bits();
  Real L(prec);
  mpfr_set(L.get(), lambda.get(), MPFR_RNDN);
  auto F = [&](const Real& g) { return g * g * (g + 3 * L) - 1; };
  // F is increasing and convex for g > 0, so Newton from a point with F >= 0
  // decreases monotonically onto the root
  Real g = min(Real(1L, prec), 1 - L + L * L);
  if (F(g) < 0.0) g = Real(1L, prec);
  Real eps = pow(Real(2L, prec), -static_cast<long>(prec) + 4);
  for (int it = 0; it < 10000; ++it) {
    Real step = F(g) / (g * (3 * g + 6 * L));
    g -= step;
    if (!(abs(step) > eps * g)) break;
  }
  return g;
}

Real saddle_g_radical(const Real& lambda, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  Real L(prec);
  mpfr_set(L.get(), lambda.get(), MPFR_RNDN);
  Real l3 = L * L * L;
  Real disc = 1 - 4 * l3;
  if (disc < 0.0) throw DomainError("saddle_g_radical: needs lambda^3 < 1/4");
  Real r = sqrt(disc);
  return -L + cbrt((1 - 2 * l3 + r) / 2) + cbrt((1 - 2 * l3 - r) / 2);
}

SaddleData saddle_data(const Real& lambda, const PrecisionContext& ctx) {
  SaddleData d;
  d.lambda = lambda;
  d.g = saddle_g(lambda, ctx);
  const Real& g = d.g;
  const Real& L = lambda;
  Real lg = log(g);
  d.f1 = (1 / (g * g) + 2 * g + 6 * L * lg) / 3 - 1;
  d.f1p = 2 * lg;
  d.f1pp = Real(-2L, g.prec()) / (g + 2 * L);
  d.f2 = g * g / sqrt(1 - L * g * g) - 1;
  return d;
}

Real almkvist_saddle(const Real& x, const Real& gamma, const PrecisionContext& ctx) {
  if (!(x > 0.0)) throw DomainError("almkvist_saddle: x must be positive");
  if (gamma > 0.0) throw DomainError("almkvist_saddle: gamma must be non-positive");
  const Constants& c = constants(ctx);
  const mpfr_prec_t prec = ctx.bits();
  Real third(mpq_class(1, 3), prec);
  Real lambda = -gamma / (3 * cbrt(Real(2L, prec)) * pow(x, 2 * third));
  SaddleData d = saddle_data(lambda, ctx);
  Real half = x / 2;
  return pow(half, gamma / 3 - 2 * third) * exp(3 * pow(half, 2 * third) * (1 + d.f1)) * (1 + d.f2) /
         sqrt(12 * c.pi);
}

Real wright_leading(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("wright_leading: n must be positive");
  const Constants& c = constants(ctx);
  const mpfr_prec_t prec = ctx.bits();
  Real half = Real(n, prec) / 2;
  return pow(c.a, Real(mpq_class(7, 36), prec)) / sqrt(12 * c.pi) * pow(half, Real(mpq_class(-25, 36), prec)) *
         exp(3 * cbrt(c.a) * pow(half, Real(mpq_class(2, 3), prec)) + c.zeta_prime_m1);
}

}  // namespace ppart
