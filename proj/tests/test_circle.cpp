#include "ppart/circle.hpp"
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

}  // namespace

TEST_CASE("lambda parameter") {
  const auto& ctx = ctx50();
  Real l = lambda_param(750, 1, ctx);
  CHECK(l.to_double() == doctest::Approx(2.5118e-4).epsilon(1e-3));
  CHECK(close(lambda_param(750, 6, ctx), 4 * lambda_param(750, 3, ctx), 45));
  // k_c = 2.948 n^{1/3} sits at lambda_c
  Real kc = dec("2.9472962253847", ctx) * cbrt(Real(1000000L, ctx.bits()));
  Real lc = kc * kc / (24 * derived_constants(ctx).c2 * pow(Real(1000000L, ctx.bits()), Real(mpq_class(2, 3), ctx.bits())));
  CHECK(close(lc, lambda_critical(ctx), 12));
}

TEST_CASE("c and d") {
  const auto& ctx = ctx50();
  Real zero(0L, ctx.bits());
  CHECK(close(c_of_lambda(zero, ctx), dec("29.46963312294340826634", ctx), 19));
  for (int i : {5, 18, 60, 110}) {
    Real l(mpq_class(i, 100), ctx.bits());
    Real want = 4 * constants(ctx).pi * constants(ctx).pi / (cbrt(2 * constants(ctx).a) * saddle_g(l, ctx));
    CHECK(close(c_of_lambda(l, ctx), want, 45));
  }
  Real lc = lambda_critical(ctx);
  CHECK(close(lc, dec("0.18011922411592864611957", ctx), 22));
  CHECK(close(d_of_lambda(lc, ctx), Real(1L, ctx.bits()), 40));
  CHECK(d_of_lambda(dec("0.17", ctx), ctx) > 1.0);
  CHECK(d_of_lambda(dec("0.19", ctx), ctx) < 1.0);
  CHECK_THROWS_AS(d_of_lambda(zero, ctx), DomainError);
}

TEST_CASE("psi and phi terms") {
  auto ctx = precision_for(750);
  Complex p = psi_m(750, 0, 1, 0, ctx);
  CHECK(close(p.re, dec("2.54576194620648293652700015280718055005767843e69", ctx), 40));
  CHECK(p.im.is_zero());
  CHECK(close(p.re, phi_m(750, 1, 0, ctx), 60));

  Complex a = psi_m(750, 1, 5, 3, ctx), b = psi_m(750, 4, 5, 3, ctx);
  CHECK(close(a.re, b.re, 60));
  CHECK(close(a.im, -b.im, 60));
  Complex c = psi_m(755, 1, 5, 3, ctx);
  // same phase, different magnitude
  CHECK(close(c.re / abs(c), a.re / abs(a), 40));

  Real sum(0L, ctx.bits());
  for (long h : {1L, 2L, 3L, 4L}) sum += psi_m(750, h, 5, 2, ctx).re;
  CHECK(close(sum, phi_m(750, 5, 2, ctx), 60));
  CHECK_THROWS_AS(psi_m(750, 2, 4, 0, ctx), DomainError);

  auto ctx2 = precision_for(6999);
  PhiStream s(6999, 1, ctx2);
  for (int m = 1; m < 12; m += 2) {
    auto t = s.term(m);
    CHECK(t.zero);
    CHECK(t.value.is_zero());
  }
}

TEST_CASE("Table 1 rows") {
  auto ctx = precision_for(750);
  CHECK(mstar_numeric(750, 4, ctx).phi_value.to_fixed(3) == "-766248063769796.487");
  CHECK(abs(mstar_numeric(750, 5, ctx).phi_value - dec("249747729385.715", ctx)) < 0.01);
  CHECK(abs(mstar_numeric(750, 17, ctx).phi_value - dec("-0.447", ctx)) < 0.01);
}

TEST_CASE("truncation points") {
  auto ctx = precision_for(7000);
  Real t = mstar_theory(7000, 1, ctx);
  CHECK(t > 770.0);
  CHECK(t < 790.0);
  CHECK(close(mstar_theory(7000, 4, ctx) * 4, t, 1));
  auto big = PrecisionContext::with_digits(50);
  long n = 1000000000L;
  Real lim = dec("29.4696", big) * cbrt(Real(n, big.bits())) + dec("216.09", big);
  CHECK(abs(mstar_theory(n, 1, big) / lim - 1) < 1e-3);
}

TEST_CASE("superasymptotic minimum for k = 1") {
  auto ctx = precision_for(6491);
  PhiBreakdown b = mstar_numeric(6491, 1, ctx);
  CHECK(b.m_star_used == 868);
  CHECK(b.stop_reason == StopReason::MinimumFound);
  CHECK(b.terms.back().m == 868);
  CHECK(b.terms.back().value.to_fixed(2) == "-7.10");
  CHECK(b.trunc_error_est.to_fixed(2) == "7.11");
  CHECK(b.max_imag_ratio < 1e-100);
  Real sum(0L, ctx.bits());
  for (const auto& r : b.terms) sum += r.value;
  CHECK(sum == b.phi_value);
  CHECK(b.phi_value.to_fixed(4).substr(b.phi_value.to_fixed(4).size() - 15) == "3439387487.1428");
}

TEST_CASE("n = 6999 truncation errors") {
  auto ctx = precision_for(6999);
  PhiBreakdown b1 = mstar_numeric(6999, 1, ctx);
  CHECK(b1.m_star_used == 880);
  CHECK(b1.trunc_error_est.to_double() == doctest::Approx(6.39e10).epsilon(0.02));
  PhiBreakdown b2 = mstar_numeric(6999, 2, ctx);
  CHECK(b2.m_star_used == 440);
  CHECK(b2.trunc_error_est.to_double() == doctest::Approx(6438.01).epsilon(0.02));

  // decreasing to a single minimum near 880, then increasing
  std::vector<double> mags;
  for (const auto& r : b1.terms)
    if (!r.value.is_zero()) mags.push_back(log(r.abs_value).to_double());
  for (const auto& r : b1.tail)
    if (!r.value.is_zero()) mags.push_back(log(r.abs_value).to_double());
  size_t at = std::min_element(mags.begin(), mags.end()) - mags.begin();
  CHECK(at == 440);
  for (size_t i = 1; i <= at; ++i) CHECK(mags[i] < mags[i - 1]);
  for (size_t i = at + 1; i < mags.size(); ++i) CHECK(mags[i] > mags[i - 1]);
}

TEST_CASE("floor stops for larger k") {
  auto ctx = precision_for(6491);
  for (long k : {6L, 12L, 19L, 40L}) {
    PhiBreakdown b = mstar_numeric(6491, k, ctx);
    CHECK(b.stop_reason == StopReason::BelowFloor);
    CHECK(b.trunc_error_est < 0.001);
  }
  CHECK(abs(mstar_numeric(6491, 19, ctx).phi_value - dec("2400308271.6744", ctx)) < 0.01);
  CHECK(abs(mstar_numeric(6491, 40, ctx).phi_value - dec("0.3005", ctx)) < 0.01);
  CHECK_THROWS_AS(mstar_numeric(6491, 3, ctx, 0.0), DomainError);
}

TEST_CASE("theory and numeric minimum agree in scale") {
  for (long n : {3000L, 5000L, 7000L}) {
    auto ctx = precision_for(n);
    PhiBreakdown b = mstar_numeric(n, 1, ctx, 1e-300);
    REQUIRE(b.stop_reason == StopReason::MinimumFound);
    double r = b.m_star_used / mstar_theory(n, 1, ctx).to_double();
    CHECK(r > 0.8);
    CHECK(r < 1.3);
  }
}

TEST_CASE("major-arc cutoffs") {
  CHECK(std::floor(n_cutoff_theory(7000, 0).to_double()) == 45);
  CHECK(std::abs(n_cutoff_theory(6491, 0).to_double() - 41) <= 3.0);
  CHECK(n_cutoff_theory(7000, 1).to_double() - n_cutoff_theory(7000, 0).to_double() ==
        doctest::Approx(2.936 * std::log(7000.0)).epsilon(1e-9));
  CHECK(n_cutoff_theory(7000, 0, 0.1).to_double() - n_cutoff_theory(7000, 0).to_double() ==
        doctest::Approx(2.936 * 0.04).epsilon(1e-9));

  auto ctx = precision_for(6491);
  CHECK(n_cutoff_numeric(6491, ctx) == 41);
  CHECK(cutoff_probe(6491, 41, ctx) > 0.01);
  CHECK(cutoff_probe(6491, 42, ctx) < 0.01);

  auto c750 = precision_for(750);
  long N = n_cutoff_numeric(750, c750);
  CHECK(N >= 17);
  CHECK(N == 22);
  Real prev = cutoff_probe(750, 1, c750);
  for (long k = 2; k <= 40; ++k) {
    Real cur = cutoff_probe(750, k, c750);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS_AS(n_cutoff_numeric(750, c750, 0.0), DomainError);
}

TEST_CASE("truncation error bound") {
  auto ctx = PrecisionContext::with_digits(60);
  DerivedConstants dc = derived_constants(ctx);
  Real c0 = c_of_lambda(Real(0L, ctx.bits()), ctx);
  Real root = c0 / dc.c2 * (1 + sqrt(Real(2L, ctx.bits()))) / 2;
  Real na = root * root * root;
  CHECK(na.to_double() == doctest::Approx(5547.9489595933).epsilon(1e-10));
  CHECK(std::abs(na.to_double() - 5540) < 20);

  auto c6491 = precision_for(6491);
  CHECK(sa_error_bound(6491, 1, c6491) > mstar_numeric(6491, 1, c6491).trunc_error_est);
  auto c6999 = precision_for(6999);
  CHECK(sa_error_bound(6999, 1, c6999) > dec("6.39e10", c6999));
  CHECK_THROWS_AS(sa_error_bound(750, 30, ctx), DomainError);
}

TEST_CASE("minor arcs") {
  auto ctx = PrecisionContext::with_digits(50);
  MinorArcBound b = minor_arc_bound(7000, 0, ctx);
  CHECK(b.type1.to_double() == doctest::Approx(1.0).epsilon(1e-12));
  MinorArcBound h = minor_arc_bound(7000, 0.5, ctx);
  CHECK(h.type1.to_double() == doctest::Approx(1 / std::sqrt(7000.0)).epsilon(1e-12));
  MinorArcBound b8 = minor_arc_bound(56000, 0, ctx);
  CHECK(b.type2.to_double() == doctest::Approx(0.433126).epsilon(1e-5));
  CHECK(b8.type2.to_double() / b.type2.to_double() < std::sqrt(1 / 8.0));
  CHECK_THROWS_AS(minor_arc_bound(7000, 0, ctx, 0.15), DomainError);
}

TEST_CASE("phi0 bound") {
  for (long n : {750L, 6491L}) {
    auto ctx = precision_for(n);
    long N = n_cutoff_numeric(n, ctx);
    for (long k = 2; k <= N; ++k) {
      PhiStream s(n, k, ctx);
      CHECK(abs(s.term(0).value) <= phi0_bound(n, k, ctx));
    }
  }
  // at k = 1 the c1^k factor assumes a C_{h,k} bound that only holds for k > 34
  auto ctx = precision_for(750);
  Real r = abs(phi_m(750, 1, 0, ctx)) / phi0_bound(750, 1, ctx);
  CHECK(r.to_double() == doctest::Approx(1.186).epsilon(2e-3));
}

TEST_CASE("estimates round to the exact value") {
  for (long n : {1L, 2L, 10L, 100L, 250L}) {
    EstimateOptions o;
    o.with_exact = true;
    EstimateReport r = p2_estimate(n, o);
    CHECK(r.rounded == r.exact);
    CHECK(abs(r.actual_error) <= 10 * r.estimated_error);
    for (const auto& b : r.per_k) CHECK(b.max_imag_ratio < std::pow(10.0, -r.ctx.digits / 2.0));
  }
}

TEST_CASE("estimate at n = 750") {
  EstimateOptions o;
  o.with_exact = true;
  EstimateReport r = p2_estimate(750, o);
  CHECK(r.N_cutoff == 22);
  CHECK(r.N_used == 21);
  CHECK(r.probe.k == 22);
  CHECK(r.rounded == r.exact);
  CHECK(abs(r.actual_error) < 0.01);
  CHECK(abs(r.actual_error) <= 10 * r.estimated_error);
  CHECK(r.digits_agreeing == 70);

  o.theory_cutoff = true;
  EstimateReport t = p2_estimate(750, o);
  CHECK(t.N_used == static_cast<long>(std::floor(n_cutoff_theory(750, 0).to_double())));
  CHECK(t.rounded == t.exact);

  EstimateOptions low;
  low.digits = 30;
  CHECK_THROWS_AS(p2_estimate(750, low), NumericalError);
}
