#include "zetakit/numeric.hpp"

#include <cmath>
#include <vector>

namespace zetakit {

NumericContext::NumericContext(unsigned decimal_digits) : decimal_digits_(decimal_digits) {
  if (decimal_digits < kMinDecimalDigits)
    throw DomainError("make_context: need at least 20 decimal digits, got " +
                      std::to_string(decimal_digits));
  // ceil(digits * log2(10)) + guard bits
  precision_bits_ =
      static_cast<long>(std::ceil(static_cast<double>(decimal_digits) * 3.3219280948873623479)) +
      kGuardBits;
}

ExtReal NumericContext::pi() const {
  ExtReal r(precision_bits_);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

ExtReal NumericContext::log2() const {
  ExtReal r(precision_bits_);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

ExtReal NumericContext::euler_gamma() const {
  ExtReal r(precision_bits_);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

ExtReal NumericContext::catalan() const {
  ExtReal r(precision_bits_);
  mpfr_const_catalan(r.raw(), MPFR_RNDN);
  return r;
}

ExtReal NumericContext::real(long v) const {
  ExtReal r(precision_bits_);
  mpfr_set_si(r.raw(), v, MPFR_RNDN);
  return r;
}

ExtReal NumericContext::real(unsigned long v) const {
  ExtReal r(precision_bits_);
  mpfr_set_ui(r.raw(), v, MPFR_RNDN);
  return r;
}

ExtReal NumericContext::real(double v) const {
  ExtReal r(precision_bits_);
  mpfr_set_d(r.raw(), v, MPFR_RNDN);
  r.check_finite("NumericContext::real(double)");
  return r;
}

ExtReal NumericContext::real(const mpz_class& v) const {
  ExtReal r(precision_bits_);
  mpfr_set_z(r.raw(), v.get_mpz_t(), MPFR_RNDN);
  return r;
}

ExtReal NumericContext::real(const mpq_class& v) const {
  ExtReal r(precision_bits_);
  mpfr_set_q(r.raw(), v.get_mpq_t(), MPFR_RNDN);
  return r;
}

ExtReal NumericContext::parse(const std::string& decimal) const {
  ExtReal r(precision_bits_);
  if (mpfr_set_str(r.raw(), decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("unparseable numeric literal: " + decimal);
  r.check_finite("NumericContext::parse");
  return r;
}

ExtReal NumericContext::pow10(long e) const {
  ExtReal ten = real(10L);
  return zetakit::pow(ten, e);
}

ExtReal NumericContext::tolerance() const {
  return pow10(-static_cast<long>(decimal_digits_) + 5);
}

ExtReal NumericContext::target_eps() const {
  return pow10(-static_cast<long>(decimal_digits_) - 3);
}

mpq_class ExtReal::to_rational() const {
  check_finite("to_rational");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string ExtReal::str(size_t digits) const {
  check_finite("str");
  if (digits == 0) {
    // Number of decimal digits that round-trips at this binary precision.
    digits = mpfr_get_str_ndigits(10, mpfr_get_prec(v_));
  }
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);

  bool neg = !mant.empty() && mant[0] == '-';
  std::string body = neg ? mant.substr(1) : mant;
  if (mpfr_zero_p(v_)) return "0";
  // mant is d1 d2 ... dn with value 0.d1d2...dn * 10^e
  std::string out = body.substr(0, 1) + "." + body.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return (neg ? "-" : "") + out;
}

ExtReal ExtReal::ulp() const {
  check_finite("ulp");
  mpfr_prec_t p = mpfr_get_prec(v_);
  ExtReal r(p);
  if (mpfr_zero_p(v_)) {
    mpfr_set_ui_2exp(r.raw(), 1, 1 - p, MPFR_RNDN);
    return r;
  }
  mpfr_abs(r.raw(), v_, MPFR_RNDU);
  mpfr_mul_2si(r.raw(), r.raw(), 1 - p, MPFR_RNDU);
  return r;
}

}  // namespace zetakit
