#include "ppart/almkvist.hpp"
#include "ppart/exact.hpp"
#include "support.hpp"

#include <cmath>

using namespace ppart;
using testing::close;
using testing::dec;

namespace {

const PrecisionContext& ctx50() {
  static PrecisionContext c = PrecisionContext::with_digits(50);
  return c;
}

Real lam(int hundredths, const PrecisionContext& ctx) { return Real(mpq_class(hundredths, 100), ctx.bits()); }

}  // namespace

TEST_CASE("series at x = 0") {
  const auto& ctx = ctx50();
  Real g = dec("-2.5", ctx);
  AlmkvistEval e = almkvist_series(Real(0L, ctx.bits()), g, ctx);
  CHECK(close(e.value, 1 / (2 * exp(lngamma((3 - g) / 2))), 45));
  CHECK_THROWS_AS(almkvist_series(Real(1L, ctx.bits()), Real(3L, ctx.bits()), ctx), DomainError);
}

TEST_CASE("series positivity and tail") {
  const auto& ctx = ctx50();
  for (const char* x : {"0.5", "40", "822.3"}) {
    AlmkvistEval e = almkvist_series(dec(x, ctx), dec("-7.25", ctx), ctx);
    CHECK(e.value > 0.0);
    CHECK(e.tail_bound < pow10(-(ctx.digits - ctx.guard), ctx.bits()) * e.value);
    CHECK(e.terms_used > 0);
  }
}

TEST_CASE("derivative identity") {
  const auto& ctx = ctx50();
  Real x = dec("5", ctx), g = dec("-2", ctx);
  Real target = almkvist_series(x, g - 1, ctx).value;
  auto central = [&](const Real& eps) {
    return (almkvist_series(x + eps, g, ctx).value - almkvist_series(x - eps, g, ctx).value) / (2 * eps);
  };
  Real e1 = abs(central(dec("1e-3", ctx)) - target);
  Real e2 = abs(central(dec("5e-4", ctx)) - target);
  double order = std::log2(e1.to_double() / e2.to_double());
  CHECK(order > 1.9);
  CHECK(order < 2.1);
}

TEST_CASE("saddle estimate") {
  const auto& ctx = ctx50();
  Real g = Real(mpq_class(-1, 12), ctx.bits());
  Real x = dec("10000", ctx);
  Real ratio = almkvist_series(x, g, ctx).value / almkvist_saddle(x, g, ctx);
  CHECK(ratio > 0.99);
  CHECK(ratio < 1.01);

  Real x750 = sqrt(constants(ctx).a) * 750;
  ratio = almkvist_series(x750, g, ctx).value / almkvist_saddle(x750, g, ctx);
  CHECK(abs(ratio - 1) < 0.005);

  // gamma = 0 collapses to the bare exponential
  Real half = x / 2;
  Real bare = pow(half, Real(mpq_class(-2, 3), ctx.bits())) * exp(3 * pow(half, Real(mpq_class(2, 3), ctx.bits()))) /
              sqrt(12 * constants(ctx).pi);
  CHECK(close(almkvist_saddle(x, Real(0L, ctx.bits()), ctx), bare, 40));
  CHECK_THROWS_AS(almkvist_saddle(Real(0L, ctx.bits()), g, ctx), DomainError);
}

TEST_CASE("saddle cubic and closed forms") {
  const auto& ctx = ctx50();
  const Real eps = pow10(-(ctx.digits - 10), ctx.bits());
  Real prev_f1, prev_f2;
  for (int i = 0; i <= 120; ++i) {
    Real l = lam(i, ctx);
    SaddleData s = saddle_data(l, ctx);
    Real res = s.g * s.g * s.g + 3 * l * s.g * s.g - 1;
    CHECK(abs(res) < eps);
    CHECK(close(s.f1p, 2 * log(s.g), 45));
    CHECK(close(s.f1pp, -2 / (s.g + 2 * l), 45));
    if (i > 0) {
      CHECK(1 + s.f1 < 1 + prev_f1);
      CHECK(1 + s.f2 < 1 + prev_f2);
    }
    CHECK((l + l * s.f2).to_double() <= 1 / std::sqrt(6.0));
    prev_f1 = s.f1;
    prev_f2 = s.f2;
    if (i <= 62) CHECK(close(saddle_g_radical(l, ctx), s.g, 40));
  }
  CHECK_THROWS_AS(saddle_data(Real(-1L, ctx.bits()), ctx), DomainError);
}

TEST_CASE("saddle data at reference points") {
  const auto& ctx = ctx50();
  SaddleData s = saddle_data(Real(0L, ctx.bits()), ctx);
  CHECK(close(s.g, Real(1L, ctx.bits()), 45));
  CHECK(close(s.f1, Real(0L, ctx.bits()), 45));
  CHECK(close(s.f2, Real(0L, ctx.bits()), 45));
  CHECK(s.f1pp.to_fixed(10) == "-2.0000000000");

  s = saddle_data(lam(18, ctx), ctx);
  CHECK(s.f1.to_fixed(3) == "-0.030");
  CHECK(close(s.f1, dec("-0.03048235610602", ctx), 13));
  CHECK(s.f1p.to_fixed(3) == "-0.328");
  CHECK(close(s.f1p, dec("-0.32830509051149", ctx), 13));
  CHECK(close(s.f1pp, dec("-1.65479001781359", ctx), 13));
  CHECK(close(1 + s.f2, dec("0.77190864313102", ctx), 13));
  CHECK((1 + s.f2).to_fixed(3) == "0.772");

  s = saddle_data(lam(120, ctx), ctx);
  CHECK(close(1 + s.f1, dec("0.0027240532859", ctx), 12));
  CHECK(close(1 + s.f2, dec("0.29050221865177", ctx), 13));
}

TEST_CASE("small-lambda series") {
  const auto& ctx = ctx50();
  // f1 + l^2 - l^3/3 = O(l^5) and f2 + 3l/2 - 11l^2/8 = O(l^3)
  auto r1 = [&](const Real& l) {
    SaddleData s = saddle_data(l, ctx);
    return (s.f1 + l * l - l * l * l / 3);
  };
  auto r2 = [&](const Real& l) {
    SaddleData s = saddle_data(l, ctx);
    return (s.f2 + 3 * l / 2 - 11 * l * l / 8);
  };
  Real a = dec("1e-2", ctx), b = dec("1e-3", ctx);
  double o1 = std::log10(abs(r1(a)).to_double() / abs(r1(b)).to_double());
  double o2 = std::log10(abs(r2(a)).to_double() / abs(r2(b)).to_double());
  CHECK(o1 > 4.8);
  CHECK(o1 < 5.2);
  CHECK(o2 > 2.8);
  CHECK(o2 < 3.2);
}

TEST_CASE("corrected Wright formula") {
  auto ctx = PrecisionContext::with_digits(60);
  auto t = p2_exact_table(5000);
  auto ratio = [&](long n) { return Real(t.values[n], ctx.bits()) / wright_leading(n, ctx); };
  Real r750 = ratio(750);
  CHECK(r750 > 0.9);
  CHECK(r750 < 1.1);
  CHECK(abs(ratio(5000) - 1) < abs(ratio(500) - 1));
  Real w1 = wright_leading(1, ctx);
  CHECK(w1 > 0.0);
}
