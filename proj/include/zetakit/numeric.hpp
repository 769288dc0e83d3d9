#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace zetakit {

// Precondition violation (bad s, a outside its interval, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A NaN or infinity appeared mid-computation. Never allowed to propagate.
class NonFiniteError : public std::runtime_error {
public:
  explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check (two routes to the same value) disagreed.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

class ExtReal;

// Working precision plus guard bits. Immutable; cheap to copy. Two contexts
// with equal precision_bits produce bit-identical results for the same
// operation sequence (all arithmetic is correctly rounded at that precision).
class NumericContext {
public:
  static constexpr unsigned kMinDecimalDigits = 20;
  static constexpr unsigned kGuardBits = 32;

  explicit NumericContext(unsigned decimal_digits);

  unsigned decimal_digits() const { return decimal_digits_; }
  long precision_bits() const { return precision_bits_; }
  unsigned guard_bits() const { return kGuardBits; }

  // Same requested accuracy, twice the digits: the re-check context used by
  // the verification harness.
  NumericContext doubled() const { return NumericContext(2 * decimal_digits_); }

  ExtReal pi() const;
  ExtReal log2() const;
  ExtReal euler_gamma() const;
  ExtReal catalan() const;

  ExtReal real(long v) const;
  ExtReal real(unsigned long v) const;
  ExtReal real(double v) const;
  ExtReal real(const mpz_class& v) const;
  ExtReal real(const mpq_class& v) const;
  ExtReal parse(const std::string& decimal) const;
  ExtReal pow10(long e) const;  // 10^e

  // Default comparison tolerance for identity checks: 10^{-(digits-5)}.
  ExtReal tolerance() const;
  // Default truncation target for series evaluation: 10^{-(digits+3)}.
  ExtReal target_eps() const;

private:
  unsigned decimal_digits_;
  long precision_bits_;
};

// Extended-precision real scalar. Finite by construction: every operation
// checks its result and throws NonFiniteError instead of letting a NaN or
// infinity escape. Immutable value semantics; safe to share across threads.
class ExtReal {
public:
  ExtReal() : ExtReal(static_cast<mpfr_prec_t>(64)) {}
  explicit ExtReal(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  ExtReal(const ExtReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  ExtReal(ExtReal&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  ExtReal& operator=(const ExtReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ExtReal& operator=(ExtReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~ExtReal() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  long precision_bits() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // The value as an exact rational (every finite binary float is one).
  mpq_class to_rational() const;

  // Round-trippable decimal form; digits=0 means full working precision.
  std::string str(size_t digits = 0) const;

  // |this| * 2^{1-prec}: one unit in the last place, rounded away from zero,
  // floored at 2^{1-prec} so it is never zero.
  ExtReal ulp() const;

  void check_finite(const char* what) const {
    if (!mpfr_number_p(v_)) throw NonFiniteError(what);
  }

private:
  mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t join_prec(const ExtReal& a, const ExtReal& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}
}  // namespace detail

#define ZETAKIT_BINOP(op, fn)                                       \
  inline ExtReal operator op(const ExtReal& a, const ExtReal& b) { \
    ExtReal r(detail::join_prec(a, b));                            \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                      \
    r.check_finite(#fn);                                           \
    return r;                                                      \
  }                                                                \
  inline ExtReal operator op(const ExtReal& a, long b) {           \
    ExtReal r(a.precision_bits());                                 \
    fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                       \
    r.check_finite(#fn "_si");                                     \
    return r;                                                      \
  }

ZETAKIT_BINOP(+, mpfr_add)
ZETAKIT_BINOP(-, mpfr_sub)
ZETAKIT_BINOP(*, mpfr_mul)
ZETAKIT_BINOP(/, mpfr_div)
#undef ZETAKIT_BINOP

inline ExtReal operator-(const ExtReal& a) {
  ExtReal r(a.precision_bits());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline ExtReal operator+(long a, const ExtReal& b) { return b + a; }
inline ExtReal operator*(long a, const ExtReal& b) { return b * a; }
inline ExtReal operator-(long a, const ExtReal& b) {
  ExtReal r(b.precision_bits());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  r.check_finite("mpfr_si_sub");
  return r;
}
inline ExtReal operator/(long a, const ExtReal& b) {
  ExtReal r(b.precision_bits());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  r.check_finite("mpfr_si_div");
  return r;
}

inline int cmp(const ExtReal& a, const ExtReal& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const ExtReal& a, const ExtReal& b) { return cmp(a, b) < 0; }
inline bool operator>(const ExtReal& a, const ExtReal& b) { return cmp(a, b) > 0; }
inline bool operator<=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) >= 0; }
inline bool operator==(const ExtReal& a, const ExtReal& b) { return cmp(a, b) == 0; }
inline bool operator!=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) != 0; }
inline bool operator<(const ExtReal& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const ExtReal& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const ExtReal& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const ExtReal& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const ExtReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define ZETAKIT_UNFN(name, fn)                  \
  inline ExtReal name(const ExtReal& a) {      \
    ExtReal r(a.precision_bits());             \
    fn(r.raw(), a.raw(), MPFR_RNDN);           \
    r.check_finite(#fn);                       \
    return r;                                  \
  }

ZETAKIT_UNFN(abs, mpfr_abs)
ZETAKIT_UNFN(sqrt, mpfr_sqrt)
ZETAKIT_UNFN(log, mpfr_log)
ZETAKIT_UNFN(exp, mpfr_exp)
ZETAKIT_UNFN(sin, mpfr_sin)
ZETAKIT_UNFN(cos, mpfr_cos)
ZETAKIT_UNFN(tan, mpfr_tan)
ZETAKIT_UNFN(cot, mpfr_cot)
ZETAKIT_UNFN(csc, mpfr_csc)
#undef ZETAKIT_UNFN

inline ExtReal pow(const ExtReal& a, const ExtReal& b) {
  ExtReal r(detail::join_prec(a, b));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  r.check_finite("mpfr_pow");
  return r;
}
inline ExtReal pow(const ExtReal& a, long b) {
  ExtReal r(a.precision_bits());
  mpfr_pow_si(r.raw(), a.raw(), b, MPFR_RNDN);
  r.check_finite("mpfr_pow_si");
  return r;
}
inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }

// Extended-precision complex scalar: componentwise arithmetic over ExtReal.
class ExtComplex {
public:
  ExtComplex() = default;
  ExtComplex(ExtReal re, ExtReal im) : re_(std::move(re)), im_(std::move(im)) {}

  const ExtReal& re() const { return re_; }
  const ExtReal& im() const { return im_; }

  ExtComplex conj() const { return {re_, -im_}; }
  // |re| + |im|: cheap norm used for error accounting.
  ExtReal norm1() const { return abs(re_) + abs(im_); }

private:
  ExtReal re_, im_;
};

inline ExtComplex operator+(const ExtComplex& a, const ExtComplex& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}
inline ExtComplex operator-(const ExtComplex& a, const ExtComplex& b) {
  return {a.re() - b.re(), a.im() - b.im()};
}
inline ExtComplex operator*(const ExtComplex& a, const ExtComplex& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
inline ExtComplex operator*(const ExtReal& a, const ExtComplex& b) {
  return {a * b.re(), a * b.im()};
}
inline ExtComplex operator/(const ExtComplex& a, const ExtComplex& b) {
  ExtReal d = b.re() * b.re() + b.im() * b.im();
  return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}

}  // namespace zetakit
