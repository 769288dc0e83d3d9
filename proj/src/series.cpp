#include "zetakit/series.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "zetakit/special.hpp"

namespace zetakit {

namespace {

// zeta(s) - 1 = sum_{k>=2} k^{-s}, evaluated without cancellation as the
// Hurwitz series at a = 2. Cached per (s, precision).
SeriesResult zeta_minus_one_cached(long s, const NumericContext& ctx) {
  static std::mutex mutex;
  static std::map<std::pair<long, long>, SeriesResult> cache;
  const std::pair<long, long> key{s, ctx.precision_bits()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SeriesResult r = detail::hurwitz_zeta_em(ctx.real(s), mpq_class(2), ctx);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(r)).first->second;
}

// -log2 of an ExtReal magnitude, for sizing truncation points.
long bits_below_one(const ExtReal& eps) {
  if (eps.is_zero()) throw DomainError("target eps must be positive");
  return -static_cast<long>(mpfr_get_exp(eps.raw())) + 2;
}

void check_query(const BinomSeriesQuery& q) {
  if (q.m < 1) throw DomainError("binom series: m >= 1 required");
  if (q.a <= 0) throw DomainError("binom series: a must be positive");
  if (q.a >= 1) throw DomainError("binom series: a >= 1 diverges (need a in (0,1))");
}

}  // namespace

BinomSeriesQuery BinomSeriesQuery::rational(mpq_class a, unsigned m) {
  BinomSeriesQuery q{std::move(a), m, true};
  q.a.canonicalize();
  check_query(q);
  return q;
}

BinomSeriesQuery BinomSeriesQuery::decimal(const std::string& a, unsigned m,
                                           const NumericContext& ctx) {
  BinomSeriesQuery q{ctx.parse(a).to_rational(), m, false};
  check_query(q);
  return q;
}

SeriesResult binom_series_direct(const BinomSeriesQuery& q, const ExtReal& target_eps,
                                 const NumericContext& ctx, const SeriesOptions& opts) {
  check_query(q);
  if (target_eps <= 0L) throw DomainError("binom_series_direct: target_eps must be positive");
  const unsigned m = q.m;
  const mpq_class a2 = q.a * q.a;
  const mpq_class gate = std::min(mpq_class(19, 20), mpq_class((1 + a2) / 2));

  // Desk-scale screen: with a this close to 1 the geometric certificate
  // cannot fire within the term budget (n* ~ -log(eps) / (2 log a)).
  {
    double log_a = std::log(q.a.get_d());
    double needed = (static_cast<double>(bits_below_one(target_eps)) * 0.6932 + 3.0) /
                    (-2.0 * log_a);
    if (!(needed < 1.5e6))
      throw DomainError("binom_series_direct: a too close to 1 to certify at desk scale");
  }

  const long n0 = (m + 1) / 2;
  ExtReal apow = pow(ctx.real(q.a), 2 * n0);
  const ExtReal a2r = ctx.real(a2);

  ExtReal sum = ctx.real(0L);
  ExtReal inherited = ctx.real(0L);  // accumulated zeta() bounds
  ExtReal tail = ctx.real(0L);
  const ExtReal quarter_eps = target_eps / 4L;

  long stop_at = -1;  // index of the certified stopping point, once found
  long n = n0;
  mpz_class binom;
  for (;; ++n) {
    if (n > 2'000'000) throw VerificationError("binom_series_direct: no convergence certificate");
    SeriesResult z = riemann_zeta_cached(2 * n, ctx);
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n), m);
    ExtReal weight = ctx.real(binom) / n * apow;
    sum = sum + weight * z.value;
    inherited = inherited + weight * z.error_bound;
    apow = apow * a2r;

    if (stop_at < 0) {
      ExtReal term = weight * z.value;
      // rho_hat bounds term_{k+1}/term_k for every k >= n and decreases in n:
      // the largest binomial growth factor is (2n+3-m)/(2n+1-m), m times.
      mpq_class ratio(2 * n + 3 - static_cast<long>(m), 2 * n + 1 - static_cast<long>(m));
      ratio.canonicalize();
      mpq_class rho = a2 * mpq_class(n, n + 1);
      for (unsigned i = 0; i < m; ++i) rho *= ratio;
      if (term < quarter_eps && rho < gate) {
        ExtReal rho_r = ctx.real(rho);
        tail = term * rho_r / (1L - rho_r);
        stop_at = n;
      }
    }
    if (stop_at >= 0) {
      long wanted = static_cast<long>(static_cast<double>(stop_at - n0 + 1) * opts.extend_terms);
      if (n - n0 + 1 >= std::max(stop_at - n0 + 1, wanted)) break;
    }
  }

  SeriesResult r;
  r.value = sum;
  r.terms_used = n - n0 + 1;
  r.precision_bits = ctx.precision_bits();
  r.error_bound = tail + inherited + detail::rounding_allowance(sum, r.terms_used);
  return r;
}

SeriesResult paired_hurwitz_result(unsigned m, const mpq_class& a, const NumericContext& ctx) {
  if (m < 1) throw DomainError("paired_hurwitz: m >= 1 required");
  if (a <= 0 || a >= 1) throw DomainError("paired_hurwitz: a must lie strictly in (0,1)");

  SeriesResult r;
  r.precision_bits = ctx.precision_bits();
  if (m == 1) {
    // The individually divergent zeta(1;.) pieces combine to -pi cot(pi a).
    r.value = -(ctx.pi() * cot(ctx.pi() * ctx.real(a)));
    r.terms_used = 1;
    r.error_bound = r.value.ulp() * 16L;
    return r;
  }
  ExtReal s = ctx.real(static_cast<long>(m));
  SeriesResult at_a = hurwitz_zeta(s, a, ctx);
  SeriesResult at_1ma = hurwitz_zeta(s, 1 - a, ctx);
  r.value = (m % 2 == 0 ? at_a.value : -at_a.value) + at_1ma.value;
  r.terms_used = at_a.terms_used + at_1ma.terms_used;
  r.error_bound =
      at_a.error_bound + at_1ma.error_bound + detail::rounding_allowance(r.value, 2);
  return r;
}

ExtReal paired_hurwitz(unsigned m, const mpq_class& a, const NumericContext& ctx) {
  return paired_hurwitz_result(m, a, ctx).value;
}

SeriesResult binom_series_closed_result(const BinomSeriesQuery& q, const NumericContext& ctx) {
  check_query(q);
  SeriesResult paired = paired_hurwitz_result(q.m, q.a, ctx);
  const long m = q.m;
  ExtReal am = pow(ctx.real(q.a), m);
  SeriesResult r;
  r.value = am / m * paired.value + ctx.real(m % 2 == 0 ? -1L : 1L) / m;
  r.terms_used = paired.terms_used;
  r.precision_bits = ctx.precision_bits();
  r.error_bound = am / m * paired.error_bound + detail::rounding_allowance(r.value, 4);
  return r;
}

ExtReal binom_series_closed(const BinomSeriesQuery& q, const NumericContext& ctx) {
  return binom_series_closed_result(q, ctx).value;
}

namespace {

void check_against_closed(const ExtReal& branch, const BinomSeriesQuery& q,
                          const NumericContext& ctx, const char* who) {
  SeriesResult closed = binom_series_closed_result(q, ctx);
  if (abs(branch - closed.value) > closed.error_bound + abs(branch).ulp() * 256L + ctx.tolerance())
    throw VerificationError(std::string(who) + ": branch formula disagrees with closed form");
}

}  // namespace

SeriesResult corollary_half_result(unsigned m, const NumericContext& ctx) {
  if (m < 1) throw DomainError("corollary_half: m >= 1 required");
  SeriesResult r;
  r.precision_bits = ctx.precision_bits();
  if (m % 2 == 1) {
    r.value = 1L / ctx.real(static_cast<long>(m));
    r.terms_used = 1;
    r.error_bound = r.value.ulp() * 4L;
  } else {
    SeriesResult zm = riemann_zeta_cached(m, ctx);
    ExtReal half_pow = pow(ctx.real(2L), -static_cast<long>(m));
    r.value = (2L * zm.value * (1L - half_pow) - 1L) / static_cast<long>(m);
    r.terms_used = zm.terms_used;
    r.error_bound = 2L * zm.error_bound / static_cast<long>(m) +
                    detail::rounding_allowance(r.value, 4);
  }
  check_against_closed(r.value, BinomSeriesQuery::rational(mpq_class(1, 2), m), ctx,
                       "corollary_half");
  return r;
}

ExtReal corollary_half(unsigned m, const NumericContext& ctx) {
  return corollary_half_result(m, ctx).value;
}

SeriesResult corollary_quarter_result(unsigned m, const NumericContext& ctx) {
  if (m < 1) throw DomainError("corollary_quarter: m >= 1 required");
  SeriesResult r;
  r.precision_bits = ctx.precision_bits();
  if (m % 2 == 1) {
    SeriesResult beta = dirichlet_beta(ctx.real(static_cast<long>(m)), ctx);
    r.value = (1L - beta.value) / static_cast<long>(m);
    r.terms_used = beta.terms_used;
    r.error_bound = beta.error_bound / static_cast<long>(m) +
                    detail::rounding_allowance(r.value, 4);
  } else {
    SeriesResult zm = riemann_zeta_cached(m, ctx);
    ExtReal half_pow = pow(ctx.real(2L), -static_cast<long>(m));
    r.value = (zm.value * (1L - half_pow) - 1L) / static_cast<long>(m);
    r.terms_used = zm.terms_used;
    r.error_bound =
        zm.error_bound / static_cast<long>(m) + detail::rounding_allowance(r.value, 4);
  }
  check_against_closed(r.value, BinomSeriesQuery::rational(mpq_class(1, 4), m), ctx,
                       "corollary_quarter");
  return r;
}

ExtReal corollary_quarter(unsigned m, const NumericContext& ctx) {
  return corollary_quarter_result(m, ctx).value;
}

std::pair<SeriesResult, SeriesResult> cot_expansion(const ExtReal& x, const NumericContext& ctx,
                                                    const SeriesOptions& opts) {
  if (x <= 0L || x >= 1L) throw DomainError("cot_expansion: x must lie strictly in (0,1)");
  const ExtReal eps = ctx.target_eps();
  const ExtReal x2 = x * x;
  const ExtReal geom = 1L / (1L - x2);

  ExtReal plain = ctx.real(0L);
  ExtReal logform = ctx.real(0L);
  ExtReal inherited = ctx.real(0L);
  ExtReal xpow = x2;
  long stop_at = -1;
  ExtReal tail_plain = ctx.real(0L);
  long n = 1;
  for (;; ++n) {
    if (n > 2'000'000) throw VerificationError("cot_expansion: no convergence");
    SeriesResult z = riemann_zeta_cached(2 * n, ctx);
    plain = plain + z.value * xpow;
    logform = logform + z.value * xpow / n;
    inherited = inherited + z.error_bound * xpow;
    xpow = xpow * x2;
    if (stop_at < 0) {
      // zeta(2n+2) <= 2 for n >= 1, so the tail is under 2 x^{2n+2}/(1-x^2)
      tail_plain = 2L * xpow * geom;
      if (tail_plain < eps) stop_at = n;
    }
    if (stop_at >= 0) {
      long wanted = static_cast<long>(static_cast<double>(stop_at) * opts.extend_terms);
      if (n >= std::max(stop_at, wanted)) break;
    }
  }

  SeriesResult first, second;
  first.value = plain;
  first.terms_used = n;
  first.precision_bits = ctx.precision_bits();
  first.error_bound = tail_plain + inherited + detail::rounding_allowance(plain, n);
  second.value = logform;
  second.terms_used = n;
  second.precision_bits = ctx.precision_bits();
  second.error_bound = tail_plain + inherited + detail::rounding_allowance(logform, n);

  ExtReal pix = ctx.pi() * x;
  ExtReal closed1 = (1L - pix * cot(pix)) / 2L;
  ExtReal closed2 = log(pix / sin(pix));
  if (abs(first.value - closed1) > first.error_bound + closed1.ulp() * 64L)
    throw VerificationError("cot_expansion: sum zeta(2n) x^{2n} misses (1 - pi x cot pi x)/2");
  if (abs(second.value - closed2) > second.error_bound + abs(closed2).ulp() * 64L + eps)
    throw VerificationError("cot_expansion: sum zeta(2n) x^{2n}/n misses log(pi x / sin pi x)");
  return {first, second};
}

const char* classic_name(ClassicId id) {
  switch (id) {
    case ClassicId::goldbach: return "goldbach";
    case ClassicId::log2: return "log2";
    case ClassicId::one_minus_gamma: return "one_minus_gamma";
    case ClassicId::tyler_chernoff: return "tyler_chernoff";
  }
  return "?";
}

ClassicId classic_from_name(const std::string& name) {
  if (name == "goldbach") return ClassicId::goldbach;
  if (name == "log2") return ClassicId::log2;
  if (name == "one_minus_gamma") return ClassicId::one_minus_gamma;
  if (name == "tyler_chernoff") return ClassicId::tyler_chernoff;
  throw DomainError("unknown classic identity: " + name);
}

SeriesResult classic_identity(ClassicId id, const NumericContext& ctx,
                              const SeriesOptions& opts) {
  const ExtReal eps = ctx.target_eps();
  const long bits = bits_below_one(eps);
  SeriesResult r;
  r.precision_bits = ctx.precision_bits();
  ExtReal sum = ctx.real(0L);
  ExtReal inherited = ctx.real(0L);
  ExtReal tail(ctx.precision_bits());
  long count = 0;

  switch (id) {
    case ClassicId::goldbach: {
      // sum_{n>=2} (zeta(n)-1); tail after N is under (1+2/N) 2^{-N}
      long N = std::max(bits + 8, 24L);
      N = static_cast<long>(static_cast<double>(N) * opts.extend_terms);
      for (long s = 2; s <= N; ++s) {
        SeriesResult t = zeta_minus_one_cached(s, ctx);
        sum = sum + t.value;
        inherited = inherited + t.error_bound;
        ++count;
      }
      tail = (1L + ctx.real(2L) / N) * pow(ctx.real(2L), -N);
      break;
    }
    case ClassicId::log2: {
      // sum_{n>=1} (zeta(2n)-1)/n; tail under (1+1/N)/(N+1) * 4^{-N}/3
      long N = std::max(bits / 2 + 6, 16L);
      N = static_cast<long>(static_cast<double>(N) * opts.extend_terms);
      for (long nn = 1; nn <= N; ++nn) {
        SeriesResult t = zeta_minus_one_cached(2 * nn, ctx);
        sum = sum + t.value / nn;
        inherited = inherited + t.error_bound;
        ++count;
      }
      tail = (1L + ctx.real(1L) / N) / (N + 1) * pow(ctx.real(4L), -N) / 3L;
      break;
    }
    case ClassicId::one_minus_gamma: {
      // sum_{n>=2} (zeta(n)-1)/n; tail under (1+2/N)/(N+1) * 2^{-N}
      long N = std::max(bits + 8, 24L);
      N = static_cast<long>(static_cast<double>(N) * opts.extend_terms);
      for (long s = 2; s <= N; ++s) {
        SeriesResult t = zeta_minus_one_cached(s, ctx);
        sum = sum + t.value / s;
        inherited = inherited + t.error_bound;
        ++count;
      }
      tail = (1L + ctx.real(2L) / N) / (N + 1) * pow(ctx.real(2L), -N);
      break;
    }
    case ClassicId::tyler_chernoff: {
      // sum_{n>=1} zeta(2n)/(n(2n+1)4^n); tail under 2*4^{-N}/(3(N+1)(2N+3))
      long N = std::max(bits / 2 + 6, 16L);
      N = static_cast<long>(static_cast<double>(N) * opts.extend_terms);
      for (long nn = 1; nn <= N; ++nn) {
        SeriesResult t = riemann_zeta_cached(2 * nn, ctx);
        ExtReal coeff =
            ctx.real(mpq_class(mpz_class(1), mpz_class(nn * (2 * nn + 1)))) * pow(ctx.real(4L), -nn);
        sum = sum + t.value * coeff;
        inherited = inherited + t.error_bound * coeff;
        ++count;
      }
      tail = 2L * pow(ctx.real(4L), -N) / ctx.real(3 * (N + 1) * (2 * N + 3));
      break;
    }
  }

  r.value = sum;
  r.terms_used = count;
  r.error_bound = tail + inherited + detail::rounding_allowance(sum, count);
  return r;
}

ExtReal classic_closed_form(ClassicId id, const NumericContext& ctx) {
  switch (id) {
    case ClassicId::goldbach: return ctx.real(1L);
    case ClassicId::log2: return ctx.log2();
    case ClassicId::one_minus_gamma: return 1L - ctx.euler_gamma();
    case ClassicId::tyler_chernoff: return log(ctx.pi()) - 1L;
  }
  throw DomainError("classic_closed_form: bad id");
}

SeriesResult integrated_log_expansion(const NumericContext& ctx) {
  // Integrate sum zeta(2n) x^{2n}/n term by term over [0, 1/2] and double:
  // each coefficient is rebuilt as 2 * (1/2)^{2n+1}/(2n+1), exact.
  const ExtReal eps = ctx.target_eps();
  const long N = std::max(bits_below_one(eps) / 2 + 6, 16L);

  ExtReal sum = ctx.real(0L);
  ExtReal inherited = ctx.real(0L);
  for (long n = 1; n <= N; ++n) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(2 * n + 1));
    den *= 2 * n + 1;
    mpq_class integrated = mpq_class(2) / mpq_class(den);  // 2 * (1/2)^{2n+1}/(2n+1)
    SeriesResult z = riemann_zeta_cached(2 * n, ctx);
    ExtReal coeff = ctx.real(integrated / n);
    sum = sum + z.value * coeff;
    inherited = inherited + z.error_bound * coeff;
  }

  SeriesResult r;
  r.value = sum;
  r.terms_used = N;
  r.precision_bits = ctx.precision_bits();
  ExtReal tail = 2L * pow(ctx.real(4L), -N) / ctx.real(3 * (N + 1) * (2 * N + 3));
  r.error_bound = tail + inherited + detail::rounding_allowance(sum, N);
  return r;
}

}  // namespace zetakit
