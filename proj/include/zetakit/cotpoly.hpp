#pragma once

#include <vector>

#include "zetakit/numeric.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit {

// Dense polynomial with exact arbitrary-size integer coefficients, constant
// term first. Canonical form: no leading zero coefficient (the zero
// polynomial is the single coefficient 0).
class IntPolynomial {
public:
  IntPolynomial() : coeffs_{mpz_class(0)} {}
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const mpz_class& coeff(unsigned k) const;  // 0 for k > degree
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  IntPolynomial derivative() const;
  mpq_class eval(const mpq_class& x) const;
  mpz_class eval(const mpz_class& x) const;
  // Horner evaluation with coefficients lifted to the argument's precision.
  ExtReal eval(const ExtReal& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Exact quotient; throws VerificationError if the division leaves a
  // remainder or the divisor's leading coefficient does not divide exactly.
  IntPolynomial divexact(const IntPolynomial& divisor) const;

  static IntPolynomial x_power(unsigned n, const mpz_class& c = 1);

private:
  std::vector<mpz_class> coeffs_;
  void trim();
};

// Cotangent derivative polynomial P_n: d^n/dx^n cot x = (-1)^n P_n(cot x).
// P_0(t) = t, P_{n+1}(t) = (1+t^2) P_n'(t). Cached, immutable once built.
const IntPolynomial& cot_poly(unsigned n);

// Cosecant derivative polynomial Q_n: d^n/dx^n csc x = (-1)^n csc x Q_n(cot x).
// Q_0(t) = 1, Q_{n+1}(t) = t Q_n(t) + (1+t^2) Q_n'(t). Needed by the
// alternating (part b) Hoffman identity.
const IntPolynomial& csc_poly(unsigned n);

// (-1)^n pi^n P_n(cot(pi x)): the n-th derivative of cot(pi x) at x.
ExtReal cot_derivative(unsigned n, const ExtReal& x, const NumericContext& ctx);

// Left side of Hoffman part (a):
//   sum_k [(k+a)^{-(n+1)} + (-1)^{n+1} (k+1-a)^{-(n+1)}].
// Asserted equal to pi^{n+1}/n! * P_n(cot a pi) before returning.
ExtReal hoffman_sum_a(unsigned n, const mpq_class& a, const NumericContext& ctx);

// Left side of Hoffman part (b):
//   sum_k (-1)^k (k+a)^{-(n+1)} + (-1)^n sum_k (-1)^k (k+1-a)^{-(n+1)}.
// Asserted equal to pi^{n+1}/n! * csc(a pi) Q_n(cot a pi) before returning.
ExtReal hoffman_sum_b(unsigned n, const mpq_class& a, const NumericContext& ctx);

// Series sides with certified bounds, and closed-form sides, exposed so the
// verification suites can compare the two routes themselves (including the
// wrong-normalization variant, which divides by (n+1)! instead of n!).
SeriesResult hoffman_lhs_a(unsigned n, const mpq_class& a, const NumericContext& ctx);
SeriesResult hoffman_lhs_b(unsigned n, const mpq_class& a, const NumericContext& ctx);
ExtReal hoffman_rhs_a(unsigned n, const mpq_class& a, const NumericContext& ctx,
                      bool wrong_normalization = false);
ExtReal hoffman_rhs_b(unsigned n, const mpq_class& a, const NumericContext& ctx);

}  // namespace zetakit
