#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace interleave {

/// Arbitrary-precision non-negative counts (C_n, l_T, n_T, ...).
using BigInt = mpz_class;
/// Exact rationals, always kept in canonical reduced form by GMP.
using Rational = mpq_class;

/// Value-semantic wrapper over an MPFR number with an explicit precision.
///
/// Binary operations produce a result at the larger of the operand
/// precisions. All rounding is to nearest.
class Real {
public:
  static constexpr mpfr_prec_t kDefaultBits = 128;

  Real() : Real(0L) {}
  Real(double v, mpfr_prec_t bits = kDefaultBits);
  Real(long v, mpfr_prec_t bits = kDefaultBits);
  Real(int v, mpfr_prec_t bits = kDefaultBits) : Real(static_cast<long>(v), bits) {}
  Real(const BigInt& v, mpfr_prec_t bits = kDefaultBits);
  Real(const Rational& v, mpfr_prec_t bits = kDefaultBits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real zero(mpfr_prec_t bits) { return Real(0L, bits); }
  static Real pi(mpfr_prec_t bits = kDefaultBits);
  static Real e(mpfr_prec_t bits = kDefaultBits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string str(int digits = 12) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

private:
  void widen_to(mpfr_prec_t bits);
  mpfr_t v_;
};

Real log(const Real& x);
Real exp(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, const Real& y);

/// A high-precision value together with an absolute error bound.
struct ApproxReal {
  Real value;
  Real error;

  bool contains(const Real& x) const;
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow2(unsigned long k);

/// Balanced product of machine-word factors; subquadratic on long inputs.
BigInt product(std::span<const std::uint64_t> factors);

/// Natural log of a positive big integer in double precision.
double log_double(const BigInt& v);

/// Full decimal plus a short scientific form, e.g. "24 (2.4e1)".
std::string decimal_and_scientific(const BigInt& v);
std::string scientific(const BigInt& v, int digits = 6);
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace interleave
