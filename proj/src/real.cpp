#include "ppart/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ppart {

namespace {

constexpr int kMaxDigits = 200000;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

PrecisionContext PrecisionContext::with_digits(int digits, int guard) {
  if (digits < 30) throw DomainError("precision below 30 digits");
  if (digits > kMaxDigits) throw DomainError("precision-unachievable: digits beyond engine limit");
  if (guard < 0) throw DomainError("negative guard digits");
  return PrecisionContext{digits, guard};
}

mpfr_prec_t PrecisionContext::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

PrecisionContext precision_for(long n) {
  if (n < 1) throw DomainError("precision_for: n must be positive");
  const double a13 = std::cbrt(1.2020569031595942);
  double d = 3.0 * a13 * std::pow(n / 2.0, 2.0 / 3.0) / std::log(10.0);
  return PrecisionContext{static_cast<int>(std::ceil(d)) + 60, 20};
}

Real::Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
Real::Real(long v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(const mpz_class& v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }
Real::Real(const mpq_class& v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }
Real::Real(const std::string& s, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(v_))
    throw DomainError("not a decimal number: " + s);
}
Real Real::from_double(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real::Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real& Real::operator+=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
Real& Real::operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

long Real::exponent10() const {
  if (mpfr_zero_p(v_) || !mpfr_number_p(v_)) return 0;
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, v_, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDD);
  long e = static_cast<long>(std::floor(mpfr_get_d(t, MPFR_RNDD)));
  mpfr_clear(t);
  return e;
}

mpz_class Real::round() const {
  if (!mpfr_number_p(v_)) throw NumericalError("rounding a non-finite value");
  Real t(prec());
  mpfr_round(t.v_, v_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
  return z;
}

std::string Real::to_fixed(int decimals) const {
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  Real scaled = *this * pow10(decimals, prec() + 64);
  mpz_class z = scaled.round();
  bool neg = z < 0;
  if (neg) z = -z;
  std::string s = z.get_str();
  if (decimals > 0) {
    if (s.size() <= static_cast<size_t>(decimals)) s.insert(0, decimals + 1 - s.size(), '0');
    s.insert(s.size() - decimals, ".");
  }
  if (neg && z != 0) s.insert(0, "-");
  return s;
}

std::string Real::to_sci(int sig) const {
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, sig, v_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string out;
  if (digits[0] == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  out += digits[0];
  if (digits.size() > 1) out += "." + digits.substr(1);
  long ex = static_cast<long>(e) - 1;
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%+03ld", ex);
  return out + buf;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }
bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) < 0; }
bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) > 0; }

#define PPART_UNARY(name, fn)              \
  Real name(const Real& x) {               \
    Real r(x.prec());                      \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }
PPART_UNARY(abs, mpfr_abs)
PPART_UNARY(sqrt, mpfr_sqrt)
PPART_UNARY(cbrt, mpfr_cbrt)
PPART_UNARY(exp, mpfr_exp)
PPART_UNARY(log, mpfr_log)
PPART_UNARY(sin, mpfr_sin)
PPART_UNARY(cos, mpfr_cos)
PPART_UNARY(tan, mpfr_tan)
#undef PPART_UNARY

Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long e) {
  Real r(x.prec());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
Real log2_const(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}
Real pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

namespace {

// reduce p/q to r/q with r in [0, 2q)
long reduce_mod_2q(long p, long q) {
  long m = 2 * q;
  long r = p % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Real sin_pi_frac(long p, long q, mpfr_prec_t prec) {
  long r = reduce_mod_2q(p, q);
  if (r == 0 || r == q) return Real(0L, prec);
  // sin(pi r/q) = sin(pi (q - r)/q) folds onto the first half period
  long s = r < q ? 1 : -1;
  if (r > q) r -= q;
  if (2 * r > q) r = q - r;
  Real x = pi(prec + 16) * r / q;
  Real out(prec);
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return s > 0 ? out : -out;
}

Real cos_pi_frac(long p, long q, mpfr_prec_t prec) {
  // cos(x) = sin(x + pi/2)
  return sin_pi_frac(2 * p + q, 2 * q, prec);
}

Complex& Complex::operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
Complex& Complex::operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
Complex& Complex::operator*=(const Complex& o) { *this = *this * o; return *this; }
Complex& Complex::operator*=(const Real& o) { re *= o; im *= o; return *this; }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real abs(const Complex& z) {
  Real r(wider(z.re, z.im));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}
Complex root_of_unity(long p, long q, mpfr_prec_t prec) {
  return {cos_pi_frac(2 * p, q, prec), sin_pi_frac(2 * p, q, prec)};
}

}  // namespace ppart
