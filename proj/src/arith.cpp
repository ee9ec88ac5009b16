#include "ppart/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace ppart {

// ---------------------------------------------------------------- Bernoulli

namespace {

// Scaled Bernoulli numbers N_j = L * B_j with L the product of primes <= cap+1,
// an integer multiple of every denominator up to order cap (von Staudt-Clausen).
class BernoulliCache {
 public:
  static BernoulliCache& instance() {
    static BernoulliCache c;
    return c;
  }

  mpq_class number(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(n);
    mpq_class q(scaled_[n], L_);
    q.canonicalize();
    return q;
  }

  const BernoulliRow& row(unsigned p, unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(p, k);
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
    extend(p);
    // a_j = C(p,j) N_j k^j, then Horner in d over j
    std::vector<mpz_class> coef(p + 1);
    mpz_class binom = 1, kp = 1;
    for (unsigned j = 0; j <= p; ++j) {
      if (j == 0 || j == 1 || j % 2 == 0) coef[j] = binom * scaled_[j] * kp;
      binom = binom * (p - j) / (j + 1);
      kp *= k;
    }
    BernoulliRow r;
    r.num.resize(k);
    for (unsigned d = 1; d <= k; ++d) {
      mpz_class acc = 0;
      for (unsigned j = 0; j <= p; ++j) {
        acc *= d;
        acc += coef[j];
      }
      r.num[d - 1] = acc;
    }
    mpz_pow_ui(r.den.get_mpz_t(), mpz_class(k).get_mpz_t(), p);
    r.den *= L_;
    return rows_.emplace(key, std::move(r)).first->second;
  }

 private:
  BernoulliCache() { rebuild(1024); }

  void rebuild(unsigned cap) {
    cap_ = cap;
    L_ = 1;
    for (unsigned q = 2; q <= cap + 1; ++q) {
      bool prime = true;
      for (unsigned f = 2; f * f <= q; ++f)
        if (q % f == 0) { prime = false; break; }
      if (prime) L_ *= q;
    }
    scaled_.assign(1, L_);
  }

  void extend(unsigned n) {
    if (n > cap_) rebuild(std::max(2 * cap_, n + 64));
    while (scaled_.size() <= n) {
      unsigned m = static_cast<unsigned>(scaled_.size());
      if (m >= 3 && m % 2 == 1) {
        scaled_.emplace_back(0);
        continue;
      }
      // sum_{j<m} C(m+1,j) N_j + (m+1) N_m = 0
      mpz_class s = 0, binom = 1;
      for (unsigned j = 0; j < m; ++j) {
        if (j < 2 || j % 2 == 0) s += binom * scaled_[j];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      mpz_class v;
      mpz_divexact_ui(v.get_mpz_t(), s.get_mpz_t(), m + 1);
      scaled_.push_back(-v);
    }
  }

  std::mutex mu_;
  unsigned cap_ = 0;
  mpz_class L_;
  std::vector<mpz_class> scaled_;
  std::map<std::pair<unsigned, unsigned>, BernoulliRow> rows_;
};

}  // namespace

mpq_class bernoulli_number(unsigned n) { return BernoulliCache::instance().number(n); }

mpq_class bernoulli_poly(unsigned p, const mpq_class& x) {
  // Horner on x with coefficients C(p,j) B_j
  mpq_class acc = 0;
  mpz_class binom = 1;
  for (unsigned j = 0; j <= p; ++j) {
    acc = acc * x + mpq_class(binom) * bernoulli_number(j);
    binom = binom * (p - j) / (j + 1);
  }
  return acc;
}

const BernoulliRow& bernoulli_row(unsigned p, unsigned k) {
  if (k == 0) throw DomainError("bernoulli_row: k must be positive");
  return BernoulliCache::instance().row(p, k);
}

// ---------------------------------------------------------------- zeta, Gamma

Real zeta_int(int s, mpfr_prec_t prec) {
  if (s < 2) throw DomainError("zeta_int: s must be at least 2");
  const mpfr_prec_t wp = prec + 32;
  const long N = std::max<long>(20, static_cast<long>(prec * 0.30103) + 10);
  Real sum(0L, wp);
  for (long n = N - 1; n >= 1; --n) sum += pow(Real(n, wp), -s);
  Real Nr(N, wp);
  sum += pow(Nr, 1 - s) / (s - 1);
  sum += pow(Nr, -s) / 2;
  Real eps = pow(Real(2L, wp), -static_cast<long>(wp));
  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  mpz_class rising = s, fact = 2;
  Real Npow = pow(Nr, -s - 1);
  Real N2 = Nr * Nr;
  for (unsigned j = 1;; ++j) {
    Real term = Real(mpq_class(bernoulli_number(2 * j) * rising / fact), wp) * Npow;
    sum += term;
    if (abs(term) < abs(sum) * eps) break;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    Npow /= N2;
  }
  Real out(prec);
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
  return out;
}

Real zeta_prime_minus_one(mpfr_prec_t prec) {
  // term-by-term s-derivative of the Euler-Maclaurin form of zeta(s) at s = -1
  const mpfr_prec_t wp = prec + 32;
  const long N = std::max<long>(20, static_cast<long>(prec * 0.30103) + 10);
  Real Nr(N, wp), logN = log(Real(N, wp));
  Real sum(0L, wp);
  for (long n = 2; n < N; ++n) sum -= Real(n, wp) * log(Real(n, wp));
  sum += Nr * Nr * logN / 2 - Nr * Nr / 4 - Nr * logN / 2 + (1 + logN) / 12;
  Real eps = pow(Real(2L, wp), -static_cast<long>(wp));
  Real Npow = 1 / (Nr * Nr);
  for (unsigned j = 2;; ++j) {
    mpq_class c = bernoulli_number(2 * j) / (mpz_class(2 * j) * (2 * j - 1) * (2 * j - 2));
    Real term = Real(c, wp) * Npow;
    sum -= term;
    if (abs(term) < eps) break;
    Npow /= Nr * Nr;
  }
  Real out(prec);
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
  return out;
}

Real lngamma(const Real& x) {
  if (!(x > 0.0)) throw DomainError("lngamma: argument must be positive");
  const mpfr_prec_t prec = x.prec();
  const mpfr_prec_t wp = prec + 32;
  const double target = std::max(10.0, prec * 0.30103 / 2);
  Real y(wp);
  mpfr_set(y.get(), x.get(), MPFR_RNDN);
  Real shift(1L, wp);
  bool shifted = false;
  while (y < target) {
    shift *= y;
    y += Real(1L, wp);
    shifted = true;
  }
  Real two_pi = 2 * pi(wp);
  Real s = (y - Real(mpq_class(1, 2), wp)) * log(y) - y + log(two_pi) / 2;
  Real eps = pow(Real(2L, wp), -static_cast<long>(wp));
  Real ypow = y;
  Real y2 = y * y;
  Real last = abs(s) + 1;
  for (unsigned j = 1; j < 100000; ++j) {
    mpq_class c = bernoulli_number(2 * j) / (mpz_class(2 * j) * (2 * j - 1));
    Real term = Real(c, wp) / ypow;
    Real at = abs(term);
    if (at > last) break;  // asymptotic series started to diverge
    s += term;
    if (at < abs(s) * eps || at < eps) break;
    last = at;
    ypow *= y2;
  }
  if (shifted) s -= log(shift);
  Real out(prec);
  mpfr_set(out.get(), s.get(), MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------- constants

const Constants& constants(const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::unique_ptr<Constants>> cache;
  const mpfr_prec_t prec = ctx.bits();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it != cache.end()) return *it->second;
  auto c = std::make_unique<Constants>();
  c->pi = pi(prec);
  c->a = zeta_int(3, prec);
  c->zeta_prime_m1 = zeta_prime_minus_one(prec);
  c->log2 = log2_const(prec);
  return *cache.emplace(prec, std::move(c)).first->second;
}

DerivedConstants derived_constants(const PrecisionContext& ctx) {
  const Constants& k = constants(ctx);
  const mpfr_prec_t prec = ctx.bits();
  Real third(mpq_class(1, 3), prec);
  Real two_a = 2 * k.a;
  // alpha = 3 gives the 2^{-1/4}
  Real c1 = pow(two_a, Real(mpq_class(1, 36), prec)) * pow(Real(2L, prec), Real(mpq_class(-1, 4), prec)) *
            exp(k.zeta_prime_m1);
  Real c2 = 3 * pow(Real(2L, prec), Real(mpq_class(-2, 3), prec)) * pow(k.a, third);
  return {c1, c2};
}

// ---------------------------------------------------------------- integers

mpz_class sigma2(unsigned long n) {
  if (n == 0) throw DomainError("sigma2: n must be positive");
  mpz_class s = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned long e = n / d;
    s += mpz_class(d) * d;
    if (e != d) s += mpz_class(e) * e;
  }
  return s;
}

std::vector<std::uint64_t> sigma2_table(unsigned long N) {
  std::vector<std::uint64_t> t(N + 1, 0);
  for (unsigned long d = 1; d <= N; ++d)
    for (unsigned long m = d; m <= N; m += d) t[m] += static_cast<std::uint64_t>(d) * d;
  return t;
}

std::vector<FareyFraction> farey(long N) {
  if (N < 1) throw DomainError("farey: N must be positive");
  std::vector<FareyFraction> out{{0, 1}};
  long a = 0, b = 1, c = 1, d = N;
  while (c < d) {
    out.push_back({c, d});
    long q = (N + b) / d;
    long nc = q * c - a, nd = q * d - b;
    a = c; b = d; c = nc; d = nd;
  }
  return out;
}

long mod_inverse(long h, long k) {
  if (k < 1) throw DomainError("mod_inverse: k must be positive");
  if (k == 1) return 0;
  long r0 = k, r1 = ((h % k) + k) % k, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw DomainError("mod_inverse: arguments not coprime");
  return ((t0 % k) + k) % k;
}

std::vector<long> coprime_residues(long k) {
  if (k < 1) throw DomainError("coprime_residues: k must be positive");
  if (k == 1) return {0};
  std::vector<long> hs;
  for (long h = 1; h < k; ++h)
    if (std::gcd(h, k) == 1) hs.push_back(h);
  return hs;
}

}  // namespace ppart
