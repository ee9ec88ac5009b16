#include "ppart/circle.hpp"

#include "ppart/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace ppart {

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::MinimumFound: return "minimum-found";
    case StopReason::BelowFloor: return "below-floor";
    case StopReason::Exhausted: return "exhausted";
  }
  return "exhausted";
}

namespace {

Real frac(long p, long q, mpfr_prec_t prec) { return Real(mpq_class(p, q), prec); }

}  // namespace

Real lambda_param(long n, long k, const PrecisionContext& ctx) {
  if (n < 1 || k < 1) throw DomainError("lambda_param: n and k must be positive");
  const mpfr_prec_t prec = ctx.bits();
  Real c2 = derived_constants(ctx).c2;
  return Real(k * k, prec) / (24 * c2 * pow(Real(n, prec), frac(2, 3, prec)));
}

Real c_of_lambda(const Real& lambda, const PrecisionContext& ctx) {
  const Constants& c = constants(ctx);
  SaddleData d = saddle_data(lambda, ctx);
  return 4 * c.pi * c.pi * exp(-d.f1p / 2) / cbrt(2 * c.a);
}

Real d_of_lambda(const Real& lambda, const PrecisionContext& ctx) {
  if (!(lambda > 0.0)) throw DomainError("d_of_lambda: lambda must be positive");
  const Constants& c = constants(ctx);
  SaddleData d = saddle_data(lambda, ctx);
  // alpha = 3
  return 72 * c.a * lambda / 64 * exp(24 * c.zeta_prime_m1 + (1 + d.f1) / lambda);
}

Real lambda_critical(const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, Real> cache;
  const mpfr_prec_t prec = ctx.bits();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
  }
  // secant on log d(lambda), which is smooth and monotone near the root
  Real x0 = frac(17, 100, prec), x1 = frac(19, 100, prec);
  Real f0 = log(d_of_lambda(x0, ctx)), f1 = log(d_of_lambda(x1, ctx));
  Real eps = pow(Real(2L, prec), -static_cast<long>(prec) + 8);
  for (int it = 0; it < 200; ++it) {
    Real x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = log(d_of_lambda(x1, ctx));
    if (!(abs(x1 - x0) > eps)) break;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(prec, x1);
  return x1;
}

// ---------------------------------------------------------------- phi stream

struct PhiStream::Impl {
  long n, k;
  PrecisionContext ctx;
  mpfr_prec_t prec;
  std::vector<long> hs;
  VEngine eng;
  std::vector<CoeffStream> streams;
  std::vector<Complex> w;  // e^{-2 pi i n h/k} e^{C_{h,k}}
  std::vector<Real> wabs;
  Real pref;  // e^{k zeta'(-1)} (1/k) (a/k)^{1/2+k/24}
  Real c;     // (a/k^3)^{1/2}
  Real x;     // c n
  Real zero_tol;

  Impl(long n_, long k_, const PrecisionContext& ctx_)
      : n(n_), k(k_), ctx(ctx_), prec(ctx_.bits()), hs(coprime_residues(k_)), eng(k_, ctx_.bits()) {
    const Constants& K = constants(ctx);
    Real kr(k, prec);
    pref = exp(kr * K.zeta_prime_m1) / kr * pow(K.a / kr, frac(12 + k, 24, prec));
    c = sqrt(K.a / (kr * kr * kr));
    x = c * n;
    zero_tol = pow10(-ctx.digits / 2, prec);
    for (long h : hs) {
      streams.emplace_back(eng, h);
      Real eC = exp(c_hk(h, k, ctx));
      long r = (n % k) * h % k;
      Complex ph = root_of_unity(-r, k, prec);
      w.push_back(ph * eC);
      wabs.push_back(eC);
    }
  }
};

PhiStream::PhiStream(long n, long k, const PrecisionContext& ctx) {
  if (n < 1 || k < 1) throw DomainError("PhiStream: n and k must be positive");
  impl_ = std::make_unique<Impl>(n, k, ctx);
}

PhiStream::~PhiStream() = default;

PhiStream::Term PhiStream::term(int m) {
  Impl& s = *impl_;
  const mpfr_prec_t prec = s.prec;
  Term t{Real(0L, prec), Real(0L, prec), Real(0L, prec), true};
  if (s.k <= 2 && m % 2 == 1) return t;
  Complex S(prec);
  Real absS(0L, prec);
  for (size_t i = 0; i < s.hs.size(); ++i) {
    const Complex& b = s.streams[i].b(m);
    S += s.w[i] * b;
    absS += s.wabs[i] * abs(b);
  }
  if (absS.is_zero() || !(abs(S.re) > s.zero_tol * absS)) return t;
  Real gamma = frac(-s.k - 12L * m, 12, prec);
  Real A = almkvist_series(s.x, gamma, s.ctx).value;
  Real f = s.pref * pow(s.c, static_cast<long>(m)) * A;
  t.value = f * S.re;
  t.imag = f * S.im;
  t.scale = f * absS;
  t.zero = false;
  return t;
}

Complex psi_m(long n, long h, long k, int m, const PrecisionContext& ctx) {
  if (n < 1 || k < 1 || m < 0) throw DomainError("psi_m: need n, k >= 1 and m >= 0");
  const Constants& K = constants(ctx);
  const mpfr_prec_t prec = ctx.bits();
  long hh = ((h % k) + k) % k;
  if (k > 1 && hh == 0) throw DomainError("psi_m: h and k are not coprime");
  CoeffSeries cs = b_coeffs(hh, k, m, ctx);
  Real kr(k, prec);
  Real c = sqrt(K.a / (kr * kr * kr));
  Real A = almkvist_series(c * n, frac(-k - 12L * m, 12, prec), ctx).value;
  Real mag = exp(kr * K.zeta_prime_m1 + c_hk(hh, k, ctx)) / kr * pow(K.a / kr, frac(12 + k, 24, prec)) *
             pow(c, static_cast<long>(m)) * A;
  long r = (n % k) * hh % k;
  return root_of_unity(-r, k, prec) * cs.b[m] * mag;
}

Real phi_m(long n, long k, int m, const PrecisionContext& ctx) {
  PhiStream s(n, k, ctx);
  return s.term(m).value;
}

// ---------------------------------------------------------------- truncation

Real mstar_theory(long n, long k, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  Real lambda = lambda_param(n, k, ctx);
  SaddleData d = saddle_data(lambda, ctx);
  Real c = c_of_lambda(lambda, ctx);
  Real c2 = derived_constants(ctx).c2;
  Real kr(k, prec);
  return c / kr * cbrt(Real(n, prec)) - c * c / (4 * c2 * kr) * d.f1pp;
}

PhiBreakdown mstar_numeric(long n, long k, const PrecisionContext& ctx, double floor, int max_m) {
  if (!(floor > 0)) throw DomainError("mstar_numeric: floor must be positive");
  const mpfr_prec_t prec = ctx.bits();
  PhiStream stream(n, k, ctx);
  Real floorR = Real::from_double(floor, prec);
  std::vector<TermRecord> all;
  std::vector<size_t> nz;  // indices of non-vanishing terms
  PhiBreakdown out;
  out.k = k;
  size_t cut = 0, best = 0;
  const size_t window = 2 * static_cast<size_t>(std::min(k, 50L)) + 2;
  bool stopped = false;
  for (int m = 0; m <= max_m; ++m) {
    PhiStream::Term t = stream.term(m);
    TermRecord rec{k, m, t.value, abs(t.value)};
    if (!t.zero) {
      Real denom = max(abs(t.value), Real(1L, prec));
      double ratio = (abs(t.imag) / denom).to_double();
      if (ratio > out.max_imag_ratio) out.max_imag_ratio = ratio;
    }
    all.push_back(rec);
    if (t.zero) continue;
    const size_t idx = all.size() - 1;
    if (all[idx].abs_value < floorR) {
      out.stop_reason = StopReason::BelowFloor;
      out.m_star_used = m;
      out.trunc_error_est = all[idx].abs_value;
      cut = idx + 1;
      stopped = true;
      break;
    }
    nz.push_back(idx);
    if (all[idx].abs_value < all[nz[best]].abs_value) best = nz.size() - 1;
    // |terms| can alternate in size with a period up to k, so the minimum is only
    // accepted once a full window of later nonzero terms has stayed above it
    if (nz.size() - 1 - best >= window) {
      // the sum runs through the smallest term; the next one estimates the error
      out.stop_reason = StopReason::MinimumFound;
      out.m_star_used = all[nz[best]].m;
      out.trunc_error_est = all[nz[best + 1]].abs_value;
      cut = nz[best] + 1;
      stopped = true;
      break;
    }
  }
  if (!stopped) {
    out.stop_reason = StopReason::Exhausted;
    cut = all.size();
    out.m_star_used = all.back().m;
    out.trunc_error_est = nz.empty() ? Real(0L, prec) : all[nz.back()].abs_value;
  }
  out.terms.assign(all.begin(), all.begin() + cut);
  out.tail.assign(all.begin() + cut, all.end());
  out.phi_value = Real(0L, prec);
  for (const auto& r : out.terms) out.phi_value += r.value;
  return out;
}

// ---------------------------------------------------------------- cutoffs

Real n_cutoff_theory(long n, double kappa2, double kappa3) {
  if (n < 1) throw DomainError("n_cutoff_theory: n must be positive");
  const mpfr_prec_t prec = 128;
  Real N(n, prec);
  Real beta1("2.948", prec);
  Real beta2 = Real("2.936", prec) * Real::from_double(kappa2, prec) - Real("1.468", prec);
  Real beta3 = Real("1.587", prec) + Real("2.936", prec) * Real::from_double(kappa3, prec);
  return beta1 * cbrt(N) + beta2 * log(N) + beta3;
}

Real cutoff_probe(long n, long k, const PrecisionContext& ctx) {
  const Constants& K = constants(ctx);
  const mpfr_prec_t prec = ctx.bits();
  Real kr(k, prec);
  Real c = sqrt(K.a / (kr * kr * kr));
  Real A = almkvist_series(c * n, frac(-k, 12, prec), ctx).value;
  return exp(kr * K.zeta_prime_m1) * pow(K.a / kr, frac(12 + k, 24, prec)) * A;
}

long n_cutoff_numeric(long n, const PrecisionContext& ctx, double threshold) {
  if (n < 1) throw DomainError("n_cutoff_numeric: n must be positive");
  if (!(threshold > 0)) throw DomainError("n_cutoff_numeric: threshold must be positive");
  Real t = Real::from_double(threshold, ctx.bits());
  for (long k = 1; k <= 100000; ++k)
    if (cutoff_probe(n, k, ctx) < t) return std::max(1L, k - 1);
  throw NumericalError("n_cutoff_numeric: probe never fell below the threshold");
}

// ---------------------------------------------------------------- bounds

Real sa_error_bound(long n, long k, const PrecisionContext& ctx) {
  const Constants& K = constants(ctx);
  const mpfr_prec_t prec = ctx.bits();
  Real lambda = lambda_param(n, k, ctx);
  if (lambda > lambda_critical(ctx)) throw DomainError("sa_error_bound: lambda exceeds lambda_c");
  DerivedConstants dc = derived_constants(ctx);
  Real c = c_of_lambda(lambda, ctx);
  Real M = mstar_theory(n, k, ctx);
  Real kr(k, prec), nr(n, prec);
  Real n13 = cbrt(nr);
  Real kk = kr * kr / (n13 * n13);
  Real pref = pow(kr, frac(-1, 2, prec)) * pow(dc.c1, k) * pow(kk, 1 + kr / 24) /
              (K.pi * K.pi * pow(2 * K.a, frac(-1, 6, prec)) * sqrt(3 * M));
  return pref * exp((-c * c / (4 * dc.c2) - c * n13 + dc.c2 * n13 * n13) / kr);
}

MinorArcBound minor_arc_bound(long n, double kappa2, const PrecisionContext& ctx, double lambda0) {
  if (n < 1) throw DomainError("minor_arc_bound: n must be positive");
  const mpfr_prec_t prec = ctx.bits();
  MinorArcBound out;
  out.lambda0 = Real::from_double(lambda0, prec);
  if (!(out.lambda0 > lambda_critical(ctx))) throw DomainError("minor_arc_bound: lambda0 must exceed lambda_c");
  Real nr(n, prec);
  Real kappa3 = log(Real("1.06", prec));
  out.type1 = Real("1.06", prec) * pow(nr, -Real::from_double(kappa2, prec)) * exp(-kappa3);
  Real d0 = d_of_lambda(out.lambda0, ctx);
  Real beta1("2.948", prec);
  Real c3 = -beta1 / 24 * log(d0);
  out.type2 = Real("2.07", prec) / sqrt(nr) / (1 - pow(d0, frac(1, 24, prec))) * exp(-c3 * cbrt(nr));
  return out;
}

Real phi0_bound(long n, long k, const PrecisionContext& ctx) {
  const Constants& K = constants(ctx);
  const mpfr_prec_t prec = ctx.bits();
  DerivedConstants dc = derived_constants(ctx);
  Real lambda = lambda_param(n, k, ctx);
  SaddleData d = saddle_data(lambda, ctx);
  Real kr(k, prec), nr(n, prec);
  Real n23 = pow(nr, frac(2, 3, prec));
  Real k3 = kr * kr * kr;
  Real b1 = pow(dc.c1, k) * pow(kr * kr / n23, 1 + kr / 24) / (pow(2 * K.a, frac(-1, 6, prec)) * sqrt(6 * K.pi * k3)) *
            exp(dc.c2 * n23 / kr * (1 + d.f1)) * (1 + d.f2);
  Real b2 = sqrt(72 * K.a / (K.pi * k3)) * pow(d_of_lambda(lambda, ctx), kr / 24);
  return min(b1, b2);
}

// ---------------------------------------------------------------- estimate

EstimateReport p2_estimate(long n, const EstimateOptions& opts) {
  if (n < 1) throw DomainError("p2_estimate: n must be positive");
  EstimateReport r;
  r.n = n;
  r.ctx = opts.digits > 0 ? PrecisionContext::with_digits(opts.digits) : precision_for(n);
  const PrecisionContext& ctx = r.ctx;
  const mpfr_prec_t prec = ctx.bits();
  if (opts.theory_cutoff) {
    long N = static_cast<long>(std::floor(n_cutoff_theory(n, opts.kappa2).to_double()));
    r.N_used = std::max(1L, N);
    r.N_cutoff = r.N_used + 1;
  } else {
    r.N_cutoff = n_cutoff_numeric(n, ctx, opts.k_threshold);
    r.N_used = std::max(1L, r.N_cutoff - 1);
  }
  const double tol = std::pow(10.0, -ctx.digits / 2.0);
  auto check = [&](const PhiBreakdown& b) {
    if (b.max_imag_ratio > tol)
      throw NumericalError("precision-insufficient: imaginary part of phi_" + std::to_string(b.k) +
                           " exceeds tolerance");
  };
  r.estimate = Real(0L, prec);
  r.estimated_error = Real(0L, prec);
  for (long k = 1; k <= r.N_used; ++k) {
    r.per_k.push_back(mstar_numeric(n, k, ctx, opts.m_floor, opts.max_m));
    check(r.per_k.back());
    r.estimate += r.per_k.back().phi_value;
    r.estimated_error += r.per_k.back().trunc_error_est;
  }
  r.probe = mstar_numeric(n, r.N_used + 1, ctx, opts.m_floor, opts.max_m);
  check(r.probe);
  r.estimated_error += abs(r.probe.phi_value);
  // the units digit has to survive the working precision
  if (!r.estimate.is_zero() && r.estimate.exponent10() + 10 > ctx.digits)
    throw NumericalError("precision-insufficient: estimate has " + std::to_string(r.estimate.exponent10() + 1) +
                         " digits but only " + std::to_string(ctx.digits) + " are carried");
  r.rounded = r.estimate.round();
  if (opts.with_exact) {
    r.has_exact = true;
    r.exact = p2_exact_table(n).values.back();
    r.actual_error = r.estimate - Real(r.exact, prec);
    std::string a = r.rounded.get_str(), b = r.exact.get_str();
    int same = 0;
    if (a.size() == b.size())
      while (same < static_cast<int>(a.size()) && a[same] == b[same]) ++same;
    r.digits_agreeing = same;
  }
  return r;
}

}  // namespace ppart
