#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zetakit/cotpoly.hpp"
#include "zetakit/series.hpp"

using namespace zetakit;

namespace {

std::vector<mpz_class> zv(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("cotpoly");

TEST_CASE("P_0..P_3 exact coefficients") {
  CHECK(cot_poly(0).coefficients() == zv({0, 1}));
  CHECK(cot_poly(1).coefficients() == zv({1, 0, 1}));
  CHECK(cot_poly(2).coefficients() == zv({0, 2, 0, 2}));
  CHECK(cot_poly(3).coefficients() == zv({2, 0, 8, 0, 6}));
}

TEST_CASE("Q_0..Q_4 exact coefficients") {
  CHECK(csc_poly(0).coefficients() == zv({1}));
  CHECK(csc_poly(1).coefficients() == zv({0, 1}));
  CHECK(csc_poly(2).coefficients() == zv({1, 0, 2}));
  CHECK(csc_poly(3).coefficients() == zv({0, 5, 0, 6}));
  CHECK(csc_poly(4).coefficients() == zv({5, 0, 28, 0, 24}));
}

TEST_CASE("property: P_n structure for n <= 20") {
  for (unsigned n = 0; n <= 20; ++n) {
    const IntPolynomial& p = cot_poly(n);
    CHECK(p.degree() == n + 1);
    CHECK(p.coeff(n + 1) == factorial(n));
    for (unsigned k = 0; k <= p.degree(); ++k) {
      // parity: P_n(-x) = (-1)^{n+1} P_n(x), so alternate coefficients vanish
      if (k % 2 != (n + 1) % 2)
        CHECK(p.coeff(k) == 0);
      else
        CHECK(p.coeff(k) > 0);
    }
  }
}

TEST_CASE("property: Q_n structure for n <= 20") {
  for (unsigned n = 0; n <= 20; ++n) {
    const IntPolynomial& q = csc_poly(n);
    CHECK(q.degree() == n);
    CHECK(q.coeff(n) == factorial(n));
    for (unsigned k = 0; k <= q.degree(); ++k) {
      if (k % 2 != n % 2)
        CHECK(q.coeff(k) == 0);
      else
        CHECK(q.coeff(k) > 0);
    }
  }
}

TEST_CASE("cot_derivative pinned values") {
  NumericContext ctx(30);
  ExtReal quarter = ctx.real(1L) / 4L;
  CHECK(abs(cot_derivative(0, quarter, ctx) - 1L) <= ctx.tolerance());
  CHECK(abs(cot_derivative(1, quarter, ctx) + 2L * ctx.pi()) <= ctx.tolerance());

  CHECK_THROWS_AS(cot_derivative(1, ctx.real(2L), ctx), DomainError);
  CHECK_THROWS_AS(cot_derivative(65, quarter, ctx), DomainError);
}

TEST_CASE("cot_derivative vs the symbolic quotient-rule engine, n <= 6") {
  NumericContext ctx(40);
  for (double xd : {0.2, 0.3, 0.45}) {
    ExtReal x = ctx.real(xd);
    for (unsigned n = 0; n <= 6; ++n) {
      // the engine works on cot(y) at y = pi x; d^n/dx^n cot(pi x) adds pi^n
      ExtReal sym = oracle::cot_derivative_symbolic(n, ctx.pi() * x, ctx) *
                    pow(ctx.pi(), static_cast<long>(n));
      ExtReal impl = cot_derivative(n, x, ctx);
      ExtReal scale = max(abs(impl), ctx.real(1L));
      CHECK(abs(sym - impl) <= scale * ctx.pow10(-30));
    }
  }
}

TEST_CASE("cot_derivative vs central finite differences at x = 0.3") {
  NumericContext ctx(60);
  ExtReal x = ctx.real(3L) / 10L;
  ExtReal h = ctx.pow10(-8);
  auto f = [&](const ExtReal& t) { return cot(ctx.pi() * t); };

  ExtReal d1 = (f(x + h) - f(x - h)) / (2L * h);
  ExtReal d2 = (f(x + h) - 2L * f(x) + f(x - h)) / (h * h);
  ExtReal d3 = (f(x + 2L * h) - 2L * f(x + h) + 2L * f(x - h) - f(x - 2L * h)) / (2L * h * h * h);

  for (unsigned n = 1; n <= 3; ++n) {
    ExtReal fd = n == 1 ? d1 : (n == 2 ? d2 : d3);
    ExtReal impl = cot_derivative(n, x, ctx);
    // five significant digits
    CHECK(abs(fd - impl) <= abs(impl) * ctx.pow10(-5));
  }
}

TEST_CASE("hoffman part (a): anchors and the series-side oracle") {
  NumericContext ctx(30);

  // n=0, a=1/3: the classical partial-fraction value pi cot(pi/3), checked
  // against a truncated combined sum with an integral bracket
  ExtReal v = hoffman_sum_a(0, mpq_class(1, 3), ctx);
  CHECK(abs(v - ctx.pi() * cot(ctx.pi() / 3L)) <= ctx.tolerance());
  oracle::Bracket br = oracle::paired_m1_bracket(mpq_class(1, 3), 200000, ctx);
  CHECK(br.contains(v, oracle::sum_slack(v, 200000, ctx)));

  // n=1, a=1/2: both sides equal pi^2
  ExtReal v11 = hoffman_sum_a(1, mpq_class(1, 2), ctx);
  CHECK(abs(v11 - ctx.pi() * ctx.pi()) <= ctx.tolerance());

  // n=2, a=1/2: cancellation on both sides
  ExtReal v21 = hoffman_sum_a(2, mpq_class(1, 2), ctx);
  CHECK(abs(v21) <= ctx.tolerance());

  CHECK_THROWS_AS(hoffman_sum_a(1, mpq_class(0), ctx), DomainError);
  CHECK_THROWS_AS(hoffman_sum_a(1, mpq_class(1), ctx), DomainError);
}

TEST_CASE("hoffman part (b): anchors") {
  NumericContext ctx(30);

  // n=0, a=1/4: pi csc(pi/4) = pi sqrt2
  ExtReal v = hoffman_sum_b(0, mpq_class(1, 4), ctx);
  CHECK(abs(v - ctx.pi() * sqrt(ctx.real(2L))) <= ctx.tolerance());

  // n=0, a=1/2: pi/2 + pi/2 = pi and csc(pi/2) Q_0 = 1
  ExtReal v0 = hoffman_sum_b(0, mpq_class(1, 2), ctx);
  CHECK(abs(v0 - ctx.pi()) <= ctx.tolerance());

  // n=1, a=1/2: both sides vanish
  CHECK(abs(hoffman_sum_b(1, mpq_class(1, 2), ctx)) <= ctx.tolerance());

  // n=2, a=1/2: both sides equal 16 beta(3) = pi^3/2
  ExtReal v2 = hoffman_sum_b(2, mpq_class(1, 2), ctx);
  CHECK(abs(v2 - pow(ctx.pi(), 3L) / 2L) <= ctx.tolerance());

  // n=1, a=1/3 frozen from the alternating-sum oracle
  ExtReal v13 = hoffman_sum_b(1, mpq_class(1, 3), ctx);
  CHECK(abs(v13 - ctx.parse("6.5797362673929057458896606665841007568758")) <= ctx.tolerance());

  // n=0, a=2/5: both alternating pieces bracketed by consecutive partial sums
  SeriesResult lhs = hoffman_lhs_b(0, mpq_class(2, 5), ctx);
  oracle::Bracket b1 = oracle::alt_bracket(1, mpq_class(2, 5), 20000, ctx);
  oracle::Bracket b2 = oracle::alt_bracket(1, mpq_class(3, 5), 20000, ctx);
  oracle::Bracket both{b1.lo + b2.lo, b1.hi + b2.hi};
  CHECK(both.contains(lhs.value, lhs.error_bound + oracle::sum_slack(lhs.value, 40000, ctx)));
}

TEST_CASE("hoffman identities across a sparse grid") {
  NumericContext ctx(30);
  for (unsigned n : {0u, 1u, 2u, 3u, 5u, 6u}) {
    for (const mpq_class& a : {mpq_class(1, 6), mpq_class(1, 3), mpq_class(2, 5),
                               mpq_class(3, 4)}) {
      SeriesResult lhs_a = hoffman_lhs_a(n, a, ctx);
      CHECK(abs(lhs_a.value - hoffman_rhs_a(n, a, ctx)) <=
            lhs_a.error_bound + ctx.tolerance());
      SeriesResult lhs_b = hoffman_lhs_b(n, a, ctx);
      CHECK(abs(lhs_b.value - hoffman_rhs_b(n, a, ctx)) <=
            lhs_b.error_bound + ctx.tolerance());
    }
  }
}

TEST_CASE("the (n+1)! normalization is rejected where it differs") {
  NumericContext ctx(30);
  // coincides at n=0 (0! = 1!), so the anchor must pass there...
  mpq_class a(1, 3);
  CHECK(hoffman_rhs_a(0, a, ctx) == hoffman_rhs_a(0, a, ctx, true));
  // ...and fail from n=1 on
  for (unsigned n = 1; n <= 4; ++n) {
    SeriesResult lhs = hoffman_lhs_a(n, a, ctx);
    ExtReal wrong = hoffman_rhs_a(n, a, ctx, true);
    CHECK(abs(lhs.value - wrong) > lhs.error_bound + ctx.tolerance());
  }
}

TEST_CASE("IntPolynomial arithmetic") {
  IntPolynomial a({mpz_class(1), mpz_class(2)});       // 1 + 2x
  IntPolynomial b({mpz_class(0), mpz_class(0), mpz_class(3)});  // 3x^2
  IntPolynomial prod = a * b;
  CHECK(prod.coefficients() == zv({0, 0, 3, 6}));
  CHECK(prod.divexact(b) == a);
  CHECK(prod.divexact(a) == b);
  CHECK((a - a).is_zero());
  CHECK(a.derivative().coefficients() == zv({2}));
  CHECK_THROWS_AS(a.divexact(IntPolynomial()), DomainError);
  CHECK_THROWS_AS((a + b).divexact(b), VerificationError);

  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> cdist(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<mpz_class> ca(4), cb(3);
    for (auto& c : ca) c = cdist(rng);
    for (auto& c : cb) c = cdist(rng);
    IntPolynomial pa(ca), pb(cb);
    if (pb.is_zero()) continue;
    CHECK((pa * pb).divexact(pb) == pa);
  }
}

TEST_CASE("reversed-coefficient Horner self-consistency") {
  // x^{deg} P(1/x) evaluates the reversed coefficient sequence
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> num(1, 30), den(1, 30);
  for (unsigned n = 0; n <= 10; ++n) {
    const IntPolynomial& p = cot_poly(n);
    std::vector<mpz_class> rev(p.coefficients().rbegin(), p.coefficients().rend());
    IntPolynomial reversed(rev);
    for (int trial = 0; trial < 5; ++trial) {
      mpq_class x(num(rng), den(rng));
      x.canonicalize();
      mpq_class direct = p.eval(x);
      mpq_class via_reverse = reversed.eval(mpq_class(1) / x);
      for (unsigned k = 0; k < p.degree(); ++k) via_reverse *= x;
      CHECK(direct == via_reverse);
    }
  }
}

TEST_SUITE_END();
