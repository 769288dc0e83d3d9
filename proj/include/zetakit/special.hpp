#pragma once

#include <vector>

#include "zetakit/numeric.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit {

// Bernoulli polynomial B_n(x) with exact rational coefficients, constant
// term first. Convention: B_1(x) = x - 1/2 (generating function t e^{xt}/(e^t-1)).
struct BernoulliPoly {
  unsigned degree = 0;
  std::vector<mpq_class> coefficients;

  mpq_class eval(const mpq_class& x) const;
  BernoulliPoly derivative() const;
};

// n-th Bernoulli number B_n (cached).
mpq_class bernoulli_number(unsigned n);

// B_n(x) from the recurrence B_n(x) = sum_k C(n,k) B_k x^{n-k}.
BernoulliPoly bernoulli_poly(unsigned n);

// zeta(-n; a) = -B_{n+1}(a)/(n+1), exact.
mpq_class hurwitz_zeta_nonpos(unsigned n, const mpq_class& a);

// zeta(s) for real s > 1, Euler-Maclaurin with certified remainder.
SeriesResult riemann_zeta(const ExtReal& s, const NumericContext& ctx);

// zeta(s; a) for real s > 1, exact rational a in (0,1].
SeriesResult hurwitz_zeta(const ExtReal& s, const mpq_class& a, const NumericContext& ctx);

// zeta(s; a+1) = zeta(s; a) - a^{-s}; cross-checked against direct
// evaluation of sum_{k>=0} (k+a+1)^{-s} before returning.
ExtReal hurwitz_zeta_shift(const ExtReal& s, const mpq_class& a, const NumericContext& ctx);

// sum_{k>=0} (-1)^k (k+a)^{-s} for s >= 1, a in (0,1). Hurwitz split for
// s > 1, Cohen-Rodriguez Villegas-Zagier acceleration at s = 1.
SeriesResult alt_hurwitz_zeta(const ExtReal& s, const mpq_class& a, const NumericContext& ctx);

// Dirichlet beta(s) = sum (-1)^n (2n+1)^{-s}, s >= 1.
SeriesResult dirichlet_beta(const ExtReal& s, const NumericContext& ctx);

// Cached zeta(s) at integer s >= 2 and context precision. Values are
// bit-deterministic, so concurrent fills are benign.
SeriesResult riemann_zeta_cached(long s, const NumericContext& ctx);

namespace detail {

// Euler-Maclaurin evaluation of sum_{k>=0} (k+a)^{-s} for any rational a > 0,
// real s > 1. Shared core of the public zeta evaluators.
SeriesResult hurwitz_zeta_em(const ExtReal& s, const mpq_class& a, const NumericContext& ctx);

// CVZ-accelerated alternating sum of (k+a)^{-s}, with the (3+sqrt8)^{-n}
// certificate. Valid for any s >= 1 (terms are totally monotone in k).
SeriesResult alt_hurwitz_cvz(const ExtReal& s, const mpq_class& a, const NumericContext& ctx);

}  // namespace detail

}  // namespace zetakit
