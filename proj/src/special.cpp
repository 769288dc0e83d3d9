#include "zetakit/special.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace zetakit {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<mpq_class> g_bernoulli;  // B_0, B_1, ...

// Extends the cache through index n. Caller holds the lock.
void fill_bernoulli(unsigned n) {
  if (g_bernoulli.empty()) {
    g_bernoulli.emplace_back(1);
    g_bernoulli.emplace_back(-1, 2);
  }
  while (g_bernoulli.size() <= n) {
    unsigned m = static_cast<unsigned>(g_bernoulli.size());
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    mpq_class acc(0);
    mpz_class binom;
    for (unsigned k = 0; k < m; ++k) {
      if ((k & 1u) && k != 1) continue;  // odd-index Bernoulli numbers vanish
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += mpq_class(binom) * g_bernoulli[k];
    }
    g_bernoulli.push_back(-acc / mpq_class(m + 1));
  }
}

// B_{2j} / (2j)! for the Euler-Maclaurin correction terms.
mpq_class bernoulli_over_factorial(unsigned two_j) {
  mpq_class b = bernoulli_number(two_j);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), two_j);
  return b / mpq_class(f);
}

// base^{-s}, with a fast path when s is a machine integer.
class NegSPow {
public:
  explicit NegSPow(const ExtReal& s)
      : is_int_(s.is_integer() && mpfr_fits_slong_p(s.raw(), MPFR_RNDN)),
        si_(is_int_ ? s.to_long() : 0),
        neg_s_(-s) {}

  ExtReal operator()(const ExtReal& base) const {
    ExtReal r(base.precision_bits());
    if (is_int_)
      mpfr_pow_si(r.raw(), base.raw(), -si_, MPFR_RNDN);
    else
      mpfr_pow(r.raw(), base.raw(), neg_s_.raw(), MPFR_RNDN);
    r.check_finite("pow(base, -s)");
    return r;
  }

private:
  bool is_int_;
  long si_;
  ExtReal neg_s_;
};

}  // namespace

mpq_class bernoulli_number(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  fill_bernoulli(n);
  return g_bernoulli[n];
}

BernoulliPoly bernoulli_poly(unsigned n) {
  BernoulliPoly p;
  p.degree = n;
  p.coefficients.resize(n + 1);
  mpz_class binom;
  for (unsigned j = 0; j <= n; ++j) {
    // coefficient of x^j is C(n, n-j) B_{n-j}
    mpz_bin_uiui(binom.get_mpz_t(), n, n - j);
    p.coefficients[j] = mpq_class(binom) * bernoulli_number(n - j);
  }
  return p;
}

mpq_class BernoulliPoly::eval(const mpq_class& x) const {
  mpq_class acc(0);
  for (size_t j = coefficients.size(); j-- > 0;) acc = acc * x + coefficients[j];
  return acc;
}

BernoulliPoly BernoulliPoly::derivative() const {
  BernoulliPoly d;
  d.degree = degree == 0 ? 0 : degree - 1;
  d.coefficients.resize(degree == 0 ? 1 : degree);
  if (degree == 0) {
    d.coefficients[0] = 0;
    return d;
  }
  for (unsigned j = 1; j <= degree; ++j)
    d.coefficients[j - 1] = coefficients[j] * mpq_class(j);
  return d;
}

mpq_class hurwitz_zeta_nonpos(unsigned n, const mpq_class& a) {
  if (a <= 0 || a > 1) throw DomainError("hurwitz_zeta_nonpos: a must lie in (0,1]");
  return -bernoulli_poly(n + 1).eval(a) / mpq_class(n + 1);
}

namespace detail {

SeriesResult hurwitz_zeta_em(const ExtReal& s, const mpq_class& a, const NumericContext& ctx) {
  if (a <= 0) throw DomainError("hurwitz_zeta_em: a must be positive");
  const long prec = ctx.precision_bits();
  const NegSPow pow_neg_s(s);

  // Cutoff M = max(20, ceil(0.7 * precision_bits)).
  const long cutoff = std::max(20L, (7L * prec + 9L) / 10L);

  ExtReal partial = ctx.real(0L);
  for (long k = 0; k < cutoff; ++k) partial = partial + pow_neg_s(ctx.real(a + k));

  const ExtReal big_n = ctx.real(a + cutoff);
  const ExtReal n_neg_s = pow_neg_s(big_n);
  ExtReal sum = partial + n_neg_s * big_n / (s - 1L) + n_neg_s / 2L;

  // The first correction at or below eps certifies the remainder at twice
  // its magnitude; scale eps to the leading term so large values (tiny a)
  // get a proportionally honest target.
  const ExtReal lead = pow_neg_s(ctx.real(a));
  const ExtReal eps = max(ctx.real(1L), lead) * ctx.target_eps() / 8L;

  // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  ExtReal rising = s;
  ExtReal n_pow = n_neg_s / big_n;
  const ExtReal n_sq = big_n * big_n;
  ExtReal remainder = ctx.real(0L);
  ExtReal prev_mag = ctx.real(0L);
  long corrections = 0;
  const long max_j = 2 * prec;
  for (long j = 1;; ++j) {
    ExtReal term = ctx.real(bernoulli_over_factorial(static_cast<unsigned>(2 * j))) * rising * n_pow;
    ExtReal mag = abs(term);
    if (mag < eps) {
      remainder = mag * 2L;  // standard bound: twice the first omitted term
      break;
    }
    if (j > 2 && mag >= prev_mag)
      throw VerificationError("hurwitz_zeta_em: correction terms stopped decreasing");
    if (j > max_j) throw VerificationError("hurwitz_zeta_em: correction depth exhausted");
    sum = sum + term;
    ++corrections;
    prev_mag = mag;
    rising = rising * (s + (2 * j - 1)) * (s + 2 * j);
    n_pow = n_pow / n_sq;
  }

  SeriesResult r;
  r.value = sum;
  r.terms_used = cutoff + corrections;
  r.precision_bits = prec;
  r.error_bound = remainder + detail::rounding_allowance(sum, r.terms_used + 2);
  return r;
}

SeriesResult alt_hurwitz_cvz(const ExtReal& s, const mpq_class& a, const NumericContext& ctx) {
  const long prec = ctx.precision_bits();
  const NegSPow pow_neg_s(s);

  // Each CVZ step gains log2(3+sqrt 8) = 2.543 bits.
  const long n = static_cast<long>((prec + 16) / 2.543) + 12;

  ExtReal base = ctx.real(3L) + sqrt(ctx.real(8L));
  ExtReal x = pow(base, n);
  ExtReal d = (x + 1L / x) / 2L;

  ExtReal b = ctx.real(-1L);
  ExtReal c = -d;
  ExtReal acc = ctx.real(0L);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    acc = acc + c * pow_neg_s(ctx.real(a + k));
    // b *= (k+n)(k-n) / ((k+1/2)(k+1))
    b = b * ((k + n) * 2L) * (k - n) / ((2 * k + 1) * (k + 1L));
  }

  SeriesResult r;
  r.value = acc / d;
  r.terms_used = n;
  r.precision_bits = prec;
  // Totally monotone terms: certificate 8 * a_0 * (3+sqrt8)^{-n}.
  r.error_bound = pow_neg_s(ctx.real(a)) * 8L / x + detail::rounding_allowance(r.value, n);
  return r;
}

}  // namespace detail

SeriesResult riemann_zeta(const ExtReal& s, const NumericContext& ctx) {
  if (s <= 1L) throw DomainError("riemann_zeta: requires s > 1 (pole at s = 1)");
  return detail::hurwitz_zeta_em(s, mpq_class(1), ctx);
}

SeriesResult hurwitz_zeta(const ExtReal& s, const mpq_class& a, const NumericContext& ctx) {
  if (s <= 1L) throw DomainError("hurwitz_zeta: requires s > 1 (pole at s = 1)");
  if (a <= 0 || a > 1) throw DomainError("hurwitz_zeta: a must lie in (0,1]");
  return detail::hurwitz_zeta_em(s, a, ctx);
}

ExtReal hurwitz_zeta_shift(const ExtReal& s, const mpq_class& a, const NumericContext& ctx) {
  SeriesResult base = hurwitz_zeta(s, a, ctx);
  ExtReal shifted = base.value - pow(ctx.real(a), -s);

  SeriesResult direct = detail::hurwitz_zeta_em(s, a + 1, ctx);
  ExtReal gap = abs(shifted - direct.value);
  ExtReal allowed = base.error_bound + direct.error_bound + shifted.ulp() * 64L;
  if (gap > allowed)
    throw VerificationError("hurwitz_zeta_shift: zeta(s;a) - a^{-s} disagrees with zeta(s;a+1)");
  return shifted;
}

SeriesResult alt_hurwitz_zeta(const ExtReal& s, const mpq_class& a, const NumericContext& ctx) {
  if (a <= 0 || a >= 1) throw DomainError("alt_hurwitz_zeta: a must lie in (0,1)");
  if (s < 1L) throw DomainError("alt_hurwitz_zeta: requires s >= 1");
  if (s == 1L) return detail::alt_hurwitz_cvz(s, a, ctx);

  // sum_{k even} - sum_{k odd} = 2^{-s} [zeta(s;a/2) - zeta(s;(a+1)/2)]
  SeriesResult even = detail::hurwitz_zeta_em(s, a / 2, ctx);
  SeriesResult odd = detail::hurwitz_zeta_em(s, (a + 1) / 2, ctx);
  ExtReal scale = pow(ctx.real(2L), -s);

  SeriesResult r;
  r.value = scale * (even.value - odd.value);
  r.terms_used = even.terms_used + odd.terms_used;
  r.precision_bits = ctx.precision_bits();
  r.error_bound = scale * (even.error_bound + odd.error_bound) +
                  detail::rounding_allowance(r.value, 4);
  return r;
}

SeriesResult dirichlet_beta(const ExtReal& s, const NumericContext& ctx) {
  if (s < 1L) throw DomainError("dirichlet_beta: requires s >= 1");
  SeriesResult half = alt_hurwitz_zeta(s, mpq_class(1, 2), ctx);
  ExtReal scale = pow(ctx.real(2L), -s);
  SeriesResult r;
  r.value = scale * half.value;
  r.terms_used = half.terms_used;
  r.precision_bits = ctx.precision_bits();
  r.error_bound = scale * half.error_bound + detail::rounding_allowance(r.value, 2);
  return r;
}

SeriesResult riemann_zeta_cached(long s, const NumericContext& ctx) {
  if (s <= 1) throw DomainError("riemann_zeta_cached: requires s > 1");
  static std::mutex mutex;
  static std::map<std::pair<long, long>, SeriesResult> cache;
  const std::pair<long, long> key{s, ctx.precision_bits()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SeriesResult r = detail::hurwitz_zeta_em(ctx.real(s), mpq_class(1), ctx);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(r)).first->second;
}

}  // namespace zetakit
