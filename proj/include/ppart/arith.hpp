#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppart {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionContext {
  int digits = 50;
  int guard = 20;

  // throws DomainError below 30 digits or above the engine limit
  static PrecisionContext with_digits(int digits, int guard = 20);

  mpfr_prec_t bits() const;
};

PrecisionContext precision_for(long n);

// RAII wrapper over mpfr_t. Every value carries its own precision; binary
// operations produce a result at the larger of the two operand precisions.
class Real {
 public:
  Real();
  explicit Real(mpfr_prec_t prec);
  Real(long v, mpfr_prec_t prec);
  Real(const mpz_class& v, mpfr_prec_t prec);
  Real(const mpq_class& v, mpfr_prec_t prec);
  Real(const std::string& decimal, mpfr_prec_t prec);
  static Real from_double(double v, mpfr_prec_t prec);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent10() const;  // floor(log10|x|), 0 for x = 0
  mpz_class round() const;  // nearest integer, ties away from zero

  // fixed-point decimal with the given number of fractional digits
  std::string to_fixed(int decimals) const;
  // scientific notation with sig significant digits, e.g. "-7.10e+00"
  std::string to_sci(int sig) const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator+(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
Real operator/(long a, const Real& b);

int cmp(const Real& a, const Real& b);
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
bool operator<(const Real& a, double b);
bool operator>(const Real& a, double b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real pi(mpfr_prec_t prec);
Real log2_const(mpfr_prec_t prec);
Real pow10(long e, mpfr_prec_t prec);
// sin(pi p/q) and cos(pi p/q) with the argument reduced exactly mod 2
Real sin_pi_frac(long p, long q, mpfr_prec_t prec);
Real cos_pi_frac(long p, long q, mpfr_prec_t prec);

struct Complex {
  Real re, im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex conj(const Complex& z);
Real abs(const Complex& z);
// e^{2 pi i p/q}
Complex root_of_unity(long p, long q, mpfr_prec_t prec);

struct Constants {
  Real pi, a, zeta_prime_m1, log2;
};

struct DerivedConstants {
  Real c1, c2;
};

// cached per precision; the returned reference stays valid for the process
const Constants& constants(const PrecisionContext& ctx);
DerivedConstants derived_constants(const PrecisionContext& ctx);

// zeta(s) for integer s >= 2 by Euler-Maclaurin
Real zeta_int(int s, mpfr_prec_t prec);
Real zeta_prime_minus_one(mpfr_prec_t prec);

Real lngamma(const Real& x);

mpq_class bernoulli_number(unsigned n);
mpq_class bernoulli_poly(unsigned p, const mpq_class& x);

// L * k^p * B_p(d/k) for d = 1..k, all over the common denominator L * k^p
struct BernoulliRow {
  std::vector<mpz_class> num;  // num[d-1]
  mpz_class den;
};
const BernoulliRow& bernoulli_row(unsigned p, unsigned k);

// integer tables
mpz_class sigma2(unsigned long n);
std::vector<std::uint64_t> sigma2_table(unsigned long N);  // index 0..N, [0] = 0

struct FareyFraction {
  long h, k;
};
std::vector<FareyFraction> farey(long N);

long mod_inverse(long h, long k);
std::vector<long> coprime_residues(long k);  // h in [0,k) with gcd(h,k)=1; {0} for k=1

}  // namespace ppart
