#include "interleave/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace interleave {

Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r = Real::zero(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::e(mpfr_prec_t bits) {
  Real r(1L, bits);
  mpfr_exp(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
  return buf.data();
}

void Real::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real log(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::zero(std::max(x.precision(), y.precision()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

bool ApproxReal::contains(const Real& x) const {
  return abs(x - value) <= error;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

namespace {

BigInt product_range(const std::vector<BigInt>& xs, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return xs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  BigInt l = product_range(xs, lo, mid);
  BigInt r = product_range(xs, mid, hi);
  return BigInt(l * r);
}

}  // namespace

BigInt product(std::span<const std::uint64_t> factors) {
  // Pack factors into words first, then multiply the words pairwise.
  std::vector<BigInt> words;
  auto flush = [&words](std::uint64_t word) {
    BigInt w;
    mpz_import(w.get_mpz_t(), 1, -1, sizeof word, 0, 0, &word);
    words.push_back(std::move(w));
  };
  std::uint64_t acc = 1;
  for (std::uint64_t f : factors) {
    if (f == 0) return BigInt(0);
    unsigned __int128 next = static_cast<unsigned __int128>(acc) * f;
    if ((next >> 64) != 0) {
      flush(acc);
      acc = f;
    } else {
      acc = static_cast<std::uint64_t>(next);
    }
  }
  flush(acc);
  return product_range(words, 0, words.size());
}

double log_double(const BigInt& v) {
  if (sgn(v) <= 0) throw std::domain_error("log_double: non-positive argument");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string scientific(const BigInt& v, int digits) {
  std::string s = v.get_str();
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s.erase(0, 1);
  if (s.size() <= 1) return (neg ? "-" : "") + s + "e0";
  Real r(v, 64 + 4 * static_cast<mpfr_prec_t>(digits));
  return r.str(digits);
}

std::string decimal_and_scientific(const BigInt& v) {
  return v.get_str() + " (" + scientific(v) + ")";
}

}  // namespace interleave
