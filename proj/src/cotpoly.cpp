#include "zetakit/cotpoly.hpp"

#include <deque>
#include <mutex>

#include "zetakit/series.hpp"
#include "zetakit/special.hpp"

namespace zetakit {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(mpz_class(0));
  trim();
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(unsigned k) const {
  static const mpz_class zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() == 1) return IntPolynomial();
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * static_cast<long>(j);
  return IntPolynomial(std::move(d));
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc(0);
  for (size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + mpq_class(coeffs_[j]);
  return acc;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc(0);
  for (size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j];
  return acc;
}

ExtReal IntPolynomial::eval(const ExtReal& x) const {
  ExtReal acc(x.precision_bits());
  for (size_t j = coeffs_.size(); j-- > 0;) {
    acc = acc * x;
    mpfr_add_z(acc.raw(), acc.raw(), coeffs_[j].get_mpz_t(), MPFR_RNDN);
  }
  acc.check_finite("IntPolynomial::eval");
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
  for (size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<unsigned>(j)) + b.coeff(static_cast<unsigned>(j));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
  for (size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<unsigned>(j)) - b.coeff(static_cast<unsigned>(j));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("IntPolynomial::divexact: division by zero");
  std::vector<mpz_class> rem = coeffs_;
  long dq = static_cast<long>(coeffs_.size()) - static_cast<long>(divisor.coeffs_.size());
  if (dq < 0) {
    if (is_zero()) return IntPolynomial();
    throw VerificationError("IntPolynomial::divexact: degree(dividend) < degree(divisor)");
  }
  std::vector<mpz_class> quot(static_cast<size_t>(dq) + 1, mpz_class(0));
  const mpz_class& lead = divisor.coeffs_.back();
  for (long j = dq; j >= 0; --j) {
    mpz_class& r = rem[static_cast<size_t>(j) + divisor.coeffs_.size() - 1];
    if (r == 0) continue;
    if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t()))
      throw VerificationError("IntPolynomial::divexact: inexact division");
    mpz_class q = r / lead;
    quot[static_cast<size_t>(j)] = q;
    for (size_t i = 0; i < divisor.coeffs_.size(); ++i)
      rem[static_cast<size_t>(j) + i] -= q * divisor.coeffs_[i];
  }
  for (const mpz_class& r : rem)
    if (r != 0) throw VerificationError("IntPolynomial::divexact: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::x_power(unsigned n, const mpz_class& c) {
  std::vector<mpz_class> v(n + 1, mpz_class(0));
  v[n] = c;
  return IntPolynomial(std::move(v));
}

namespace {

std::mutex g_poly_mutex;
// deques: handed-out references must survive later cache growth
std::deque<IntPolynomial> g_cot_polys;  // P_n
std::deque<IntPolynomial> g_csc_polys;  // Q_n

const IntPolynomial& one_plus_t2() {
  static const IntPolynomial p({mpz_class(1), mpz_class(0), mpz_class(1)});
  return p;
}

const IntPolynomial& t_poly() {
  static const IntPolynomial p({mpz_class(0), mpz_class(1)});
  return p;
}

}  // namespace

const IntPolynomial& cot_poly(unsigned n) {
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  if (g_cot_polys.empty()) g_cot_polys.push_back(t_poly());  // P_0 = t
  while (g_cot_polys.size() <= n)
    g_cot_polys.push_back(one_plus_t2() * g_cot_polys.back().derivative());
  return g_cot_polys[n];
}

const IntPolynomial& csc_poly(unsigned n) {
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  if (g_csc_polys.empty()) g_csc_polys.push_back(IntPolynomial({mpz_class(1)}));  // Q_0 = 1
  while (g_csc_polys.size() <= n) {
    const IntPolynomial& q = g_csc_polys.back();
    g_csc_polys.push_back(t_poly() * q + one_plus_t2() * q.derivative());
  }
  return g_csc_polys[n];
}

ExtReal cot_derivative(unsigned n, const ExtReal& x, const NumericContext& ctx) {
  if (n > 64) throw DomainError("cot_derivative: n <= 64");
  if (x.is_integer()) throw DomainError("cot_derivative: cot(pi x) has a pole at integer x");
  ExtReal t = cot(ctx.pi() * x);
  ExtReal value = pow(ctx.pi(), static_cast<long>(n)) * cot_poly(n).eval(t);
  return (n % 2 == 0) ? value : -value;
}

namespace {

ExtReal factorial_real(unsigned n, const NumericContext& ctx) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return ctx.real(f);
}

void check_unit_interval_open(const mpq_class& a, const char* who) {
  if (a <= 0 || a >= 1) throw DomainError(std::string(who) + ": a must lie strictly in (0,1)");
}

}  // namespace

ExtReal hoffman_rhs_a(unsigned n, const mpq_class& a, const NumericContext& ctx,
                      bool wrong_normalization) {
  check_unit_interval_open(a, "hoffman_rhs_a");
  ExtReal t = cot(ctx.pi() * ctx.real(a));
  ExtReal fact = factorial_real(wrong_normalization ? n + 1 : n, ctx);
  return pow(ctx.pi(), static_cast<long>(n) + 1) / fact * cot_poly(n).eval(t);
}

ExtReal hoffman_rhs_b(unsigned n, const mpq_class& a, const NumericContext& ctx) {
  check_unit_interval_open(a, "hoffman_rhs_b");
  ExtReal arg = ctx.pi() * ctx.real(a);
  return pow(ctx.pi(), static_cast<long>(n) + 1) / factorial_real(n, ctx) * csc(arg) *
         csc_poly(n).eval(cot(arg));
}

SeriesResult hoffman_lhs_a(unsigned n, const mpq_class& a, const NumericContext& ctx) {
  check_unit_interval_open(a, "hoffman_lhs_a");
  SeriesResult r;
  r.precision_bits = ctx.precision_bits();
  if (n == 0) {
    // The paired m=1 combined value: pi cot(pi a).
    r.value = ctx.pi() * cot(ctx.pi() * ctx.real(a));
    r.terms_used = 1;
    r.error_bound = r.value.ulp() * 16L;
    return r;
  }
  SeriesResult paired = paired_hurwitz_result(n + 1, a, ctx);
  r.value = (n % 2 == 0) ? -paired.value : paired.value;
  r.terms_used = paired.terms_used;
  r.error_bound = paired.error_bound;
  return r;
}

SeriesResult hoffman_lhs_b(unsigned n, const mpq_class& a, const NumericContext& ctx) {
  check_unit_interval_open(a, "hoffman_lhs_b");
  ExtReal s = ctx.real(static_cast<long>(n) + 1);
  SeriesResult first = alt_hurwitz_zeta(s, a, ctx);
  SeriesResult second = alt_hurwitz_zeta(s, 1 - a, ctx);
  SeriesResult r;
  r.value = (n % 2 == 0) ? first.value + second.value : first.value - second.value;
  r.terms_used = first.terms_used + second.terms_used;
  r.precision_bits = ctx.precision_bits();
  r.error_bound =
      first.error_bound + second.error_bound + detail::rounding_allowance(r.value, 2);
  return r;
}

ExtReal hoffman_sum_a(unsigned n, const mpq_class& a, const NumericContext& ctx) {
  SeriesResult lhs = hoffman_lhs_a(n, a, ctx);
  ExtReal rhs = hoffman_rhs_a(n, a, ctx);
  if (abs(lhs.value - rhs) > lhs.error_bound + abs(rhs).ulp() * 256L + ctx.tolerance())
    throw VerificationError("hoffman_sum_a: series and polynomial sides disagree");
  return lhs.value;
}

ExtReal hoffman_sum_b(unsigned n, const mpq_class& a, const NumericContext& ctx) {
  SeriesResult lhs = hoffman_lhs_b(n, a, ctx);
  ExtReal rhs = hoffman_rhs_b(n, a, ctx);
  if (abs(lhs.value - rhs) > lhs.error_bound + abs(rhs).ulp() * 256L + ctx.tolerance())
    throw VerificationError("hoffman_sum_b: series and polynomial sides disagree");
  return lhs.value;
}

}  // namespace zetakit
